// Checks for the set-pair formula:
//   psi, simple      the exchange map and the q-binomial identity it realizes
//   coeff_*, M_e2_0  closed-form coefficients of M^mu_n(b) and its e2 = 0 value
//   ana, xx, t_first, t_second, dx  recurrences for M^mu_n(b)
//   rephrase         the X_mu M^mu_n(b) form of the coefficient sum
//   sym, sym_pairs   X <-> Y invariance, globally and pair by pair
//   ind              truncating B leaves the needed B(l) unchanged
//   pos2             the e2 = 0 path model
// Identities that mix M's are compared after specialization.

#include <algorithm>
#include <numeric>

#include "asc/setpair.hpp"

namespace asc {

namespace {

XYPoly qx(const ParamPoly& p) { return XYPoly::from_q(p); }

Composition shifted(const Composition& mu, int by) {
  Composition out = mu;
  for (int& v : out) v += by;
  return out;
}

Composition inserted(const Composition& mu, int v) {
  Composition out = mu;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

Composition prefixed(int v, const Composition& mu) {
  Composition out{v};
  out.insert(out.end(), mu.begin(), mu.end());
  return out;
}

std::string comp_text(const Composition& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(mu[i]);
  }
  return s + ")";
}

// X_mu = prod_i X_{mu_i + i - 1}.
XYPoly x_mu(const Composition& mu) {
  XYPoly p = 1;
  for (std::size_t i = 0; i < mu.size(); ++i) p *= XYPoly::X(mu[i] + static_cast<int>(i));
  return p;
}

int set_sum(const IndexSet& s) { return std::accumulate(s.begin(), s.end(), 0); }

std::string where_nb(int n, int b, const Composition& mu) {
  return "n=" + std::to_string(n) + " b=" + std::to_string(b) + " mu=" + comp_text(mu);
}

void same(Tally& t, const XYPoly& lhs, const XYPoly& rhs, const std::function<std::string()>& where) {
  t.record(specialize_xy(lhs) == specialize_xy(rhs), where);
}

std::string cap(const char* what, int v) { return std::string(" (") + what + "<=" + std::to_string(v) + ")"; }

void check_psi(Report& rep, int max) {
  Tally t;
  for (int total = 0; total <= max; ++total)
    for (int n = 0; n <= total; ++n)
      for (int a = 0; n + a <= total; ++a) {
        const int b = total - n - a;
        for_each_subset(n + a, a, [&](const IndexSet& A) {
          for_each_subset(n + a + b, b, [&](const IndexSet& B) {
            const auto [S1, S2] = psi(n, A, B);
            auto where = [&] { return "n=" + std::to_string(n) + " " + set_text(A) + "," + set_text(B); };
            const bool shape = static_cast<int>(S1.size()) == b && static_cast<int>(S2.size()) == a &&
                               (S1.empty() || S1.back() < n + b) && (S2.empty() || S2.back() < n + a + b);
            t.record(shape && set_sum(S1) + set_sum(S2) == set_sum(A) + set_sum(B) &&
                         psi(n, S1, S2) == std::pair{A, B},
                     where);
          });
        });
      }
  const auto ex = psi(1, {0, 2, 3}, {2, 4, 5, 7});
  t.record(ex == std::pair{IndexSet{0, 2, 3, 4}, IndexSet{2, 5, 7}}, [&] { return "example pair"; });
  rep.add("psi" + cap("n+a+b", max), t.pass(), t.summary());
}

void check_simple(Report& rep, int max) {
  Tally t;
  for (int total = 0; total <= max; ++total)
    for (int n = 0; n <= total; ++n)
      for (int a = 0; n + a <= total; ++a) {
        const int b = total - n - a;
        t.record(verify_simple_identity(n, a, b),
                 [&] { return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b); });
      }
  rep.add("simple" + cap("n+a+b", max), t.pass(), t.summary());
}

// [prod_{i in E} Y_i] of an expansion in Y_0, Y_1, ... over Z[q].
ParamPoly y_coefficient(const XYPoly& p, const IndexSet& E) {
  std::vector<XYMonomial::Factor> want;
  for (int i : E) want.emplace_back(XYVar{false, i}.code(), 1);
  ParamPoly c;
  for (const auto& [m, k] : p.terms())
    if (m.factors() == want) c += q_pow(m.e_q()).scaled(k);
  return c;
}

void check_coeff(Report& rep, int max) {
  Tally closed, e2zero;
  const std::pair<Var, ParamPoly> no_e2[] = {{Var::e2, ParamPoly(0)}};
  const ParamPoly beta = ParamPoly::var(Var::b);
  for (int total = 0; total <= max; ++total)
    for (int n = 0; n <= total; ++n)
      for (int a = 0; n + a <= total; ++a) {
        const int b = total - n - a;
        for_each_composition(a, -1, n, [&](const Composition& mu) {
          const XYPoly M = M_mu_xy(mu, n, b);
          const ParamPoly expected = q_pow(b * (b - 1) / 2) * q_binomial(n + a + b, b) * beta.pow(static_cast<unsigned>(b));
          e2zero.record(substitute(specialize_xy(M), no_e2) == expected, [&] { return where_nb(n, b, mu); });
          if (!mu.empty() && mu.front() < 0) return;
          for_each_subset(n + b, b, [&](const IndexSet& E) {
            closed.record(coeff_extract_M(mu, n, E) == y_coefficient(M, E),
                          [&] { return where_nb(n, b, mu) + " E=" + set_text(E); });
          });
        });
      }
  const XYPoly M = M_mu_xy({0, 0}, 2, 2);
  const bool ex = y_coefficient(M, {0, 1}) == parse_param_poly("1 + q^3 + 2*q^4 + q^5 + q^8") &&
                  coeff_extract_M({0, 0}, 2, {0, 1}) == y_coefficient(M, {0, 1});
  rep.add("coeff_example", ex);
  rep.add("coeff_closed_form" + cap("n+a+b", max), closed.pass(), closed.summary());
  rep.add("M_e2_0" + cap("n+a+b", max), e2zero.pass(), e2zero.summary());
}

// Right side of the q-integer lemma. For each l in 0..n, with c parts of nu
// below l: q^{l+c} [e+1]_q M^{nu(l)} when l is a part of multiplicity e,
// q^{l+c} M^{nu(l)} otherwise; a block of e parts equal to -1 adds [e]_q M^{nu(-1)}.
XYPoly t_rhs(const Composition& nu, int n, int b) {
  XYPoly rhs;
  const int minus = static_cast<int>(std::count(nu.begin(), nu.end(), -1));
  if (minus > 0) rhs += qx(q_int(minus)) * M_mu_xy(inserted(nu, -1), n, b);
  for (int l = 0; l <= n; ++l) {
    const int below = static_cast<int>(std::lower_bound(nu.begin(), nu.end(), l) - nu.begin());
    const int mult = static_cast<int>(std::count(nu.begin(), nu.end(), l));
    XYPoly c = XYPoly::q_pow(l + below);
    if (mult > 0) c *= qx(q_int(mult + 1));
    rhs += c * M_mu_xy(inserted(nu, l), n, b);
  }
  return rhs;
}

int distinct_parts(Composition nu) { return static_cast<int>(std::unique(nu.begin(), nu.end()) - nu.begin()); }

void check_lemmas(Report& rep, int max, int t_shape) {
  Tally ana, xx, t1, t2, dx;
  for (int total = 0; total <= max; ++total)
    for (int n = 0; n <= total; ++n)
      for (int a = 0; n + a <= total; ++a) {
        const int b = total - n - a;
        // M^mu_{n+1}(b) = Y_{n+a+b} M^mu_{n+1}(b-1) + M^{mu-1}_n(b)
        if (b >= 1)
          for_each_composition(a, 0, n + 1, [&](const Composition& mu) {
            same(ana, M_mu_xy(mu, n + 1, b),
                 XYPoly::Y(n + a + b) * M_mu_xy(mu, n + 1, b - 1) + M_mu_xy(shifted(mu, -1), n, b),
                 [&] { return where_nb(n, b, mu); });
          });
        // M_n^{(-1,nu-1)}(b) = q^{n+a+b} Y_{-1} M_{n+1}^nu(b-1) + M_n^{nu-1}(b), |nu| = a-1
        if (a >= 1 && b >= 1)
          for_each_composition(a - 1, 0, n + 1, [&](const Composition& nu) {
            const Composition lowered = shifted(nu, -1);
            same(xx, M_mu_xy(prefixed(-1, lowered), n, b),
                 XYPoly::q_pow(n + a + b) * XYPoly::Y(-1) * M_mu_xy(nu, n + 1, b - 1) + M_mu_xy(lowered, n, b),
                 [&] { return where_nb(n, b, nu); });
          });
        // [n+b+1+a]_q M^nu_n(b) expanded by inserting one more part.
        if (a >= 1)
          for_each_composition(a, -1, n, [&](const Composition& nu) {
            if (a + distinct_parts(nu) > t_shape) return;
            const XYPoly lhs = qx(q_int(n + b + 1 + a)) * M_mu_xy(nu, n, b);
            same(nu.front() >= 0 ? t1 : t2, lhs, t_rhs(nu, n, b), [&] { return where_nb(n, b, nu); });
          });
        // Refinement: nu of length a-1 with parts in [0, n+1].
        if (a >= 1)
          for_each_composition(a - 1, 0, n + 1, [&](const Composition& nu) {
            const Composition lowered = shifted(nu, -1);
            Composition top = nu;
            top.push_back(n + 1);
            const XYPoly lhs = x_mu(top) * M_mu_xy(shifted(top, -1), n, b) -
                               (XYPoly::X(n + a + b) - XYPoly::X(0)) * x_mu(nu) * M_mu_xy(lowered, n, b) -
                               XYPoly::X(0) * x_mu(nu) * M_mu_xy(prefixed(-1, lowered), n, b);
            XYPoly rhs;
            for (int i = 0; i <= n; ++i) {
              Composition bar;
              for (int v : nu) bar.push_back(v <= i ? v : v - 1);
              bar = inserted(bar, i);
              rhs += x_mu(bar) * (M_mu_xy(inserted(lowered, i), n, b) - M_mu_xy(inserted(lowered, i - 1), n, b));
            }
            same(dx, lhs, rhs, [&] { return where_nb(n, b, nu); });
          });
      }
  rep.add("ana" + cap("n+a+b", max), ana.pass(), ana.summary());
  rep.add("xx" + cap("n+a+b", max), xx.pass(), xx.summary());
  rep.add("t_first" + cap("n+a+b", max), t1.pass(), t1.summary());
  rep.add("t_second" + cap("n+a+b", max), t2.pass(), t2.summary());
  rep.add("dx" + cap("n+a+b", max), dx.pass(), dx.summary());
}

void check_rephrase(Report& rep, int max) {
  Tally t;
  for (int n = 0; n <= max; ++n)
    for (int k = 0; n + k <= max; ++k) {
      XYPoly sum;
      for (int a = 0; a <= k; ++a)
        for_each_composition(a, 0, n, [&](const Composition& mu) { sum += x_mu(mu) * M_mu_xy(mu, n, k - a); });
      t.record(sum == coeff_setpair_xy(n, k), [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  rep.add("rephrase" + cap("n+k", max), t.pass(), t.summary());
}

void check_sym(Report& rep, int max_sum, int max_pairs) {
  Tally whole, pairs, ind;
  for (int n = 0; n <= max_sum; ++n)
    for (int k = 0; n + k <= max_sum; ++k) {
      const XYPoly p = coeff_setpair_xy(n, k);
      whole.record(swap_xy(p) == p, [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  for (int total = 0; total <= max_pairs; ++total)
    for (int n = 0; n <= total; ++n)
      for (int a = 0; n + a <= total; ++a) {
        const int b = total - n - a;
        for_each_subset(n + a, a, [&](const IndexSet& A) {
          for_each_subset(n + a + b, b, [&](const IndexSet& B) {
            auto where = [&] { return "n=" + std::to_string(n) + " " + set_text(A) + "," + set_text(B); };
            const auto [B2, A2] = psi(n, A, B);
            const XYPoly w = weight_setpair_xy(n, A, B);
            XYPoly plain = XYPoly::q_pow(set_sum(B) - set_sum(B2));
            for (int i : A) plain *= XYPoly::X(i);
            for (int i : B2) plain *= XYPoly::Y(i);
            pairs.record(w == plain && swap_xy(w) == weight_setpair_xy(n, B2, A2), where);

            IndexSet C;
            for (int x : B)
              if (x < n + b) C.push_back(x);
            const int k = b - static_cast<int>(C.size());
            bool same_rank = true;
            for (int l = 1; l <= n + k; ++l) same_rank = same_rank && rank_complement(B, l) == rank_complement(C, l);
            ind.record(same_rank, where);
          });
        });
      }
  rep.add("sym" + cap("n+k", max_sum), whole.pass(), whole.summary());
  rep.add("sym_pairs" + cap("n+a+b", max_pairs), pairs.pass(), pairs.summary());
  rep.add("ind" + cap("n+a+b", max_pairs), ind.pass(), ind.summary());
}

void check_pos2(Report& rep, int max) {
  Tally t;
  for (int n = 0; n <= max; ++n)
    for (int k = 0; n + k <= max; ++k)
      t.record(pos2_graph_oracle(n, k) == substitute(coeff_setpair(n, k), Var::e2, ParamPoly(0)),
               [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
  rep.add("pos2" + cap("n+k", max), t.pass(), t.summary());
}

}  // namespace

Report verify_section4(const Section4Ranges& r) {
  Report rep("section4");
  check_psi(rep, r.psi);
  check_simple(rep, r.simple);
  check_coeff(rep, r.coeff);
  check_lemmas(rep, r.lemmas, r.t_shape);
  check_rephrase(rep, r.rephrase);
  check_sym(rep, r.sym, r.pairs);
  check_pos2(rep, r.pos2);
  return rep;
}

}  // namespace asc
