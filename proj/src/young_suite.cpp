// Checks for the u-weight formula at a fixed (n, k):
//   decom   the two rectangles split exactly into the B and C blocks
//   bi_a/b/c  the three block bijections are mutually inverse
//   re_a..re_d  block-wise weight identities, and their total
//   lem, prop1, 219  auxiliary q-identities up to index n+k
//   as      closed forms of v_n
//   tilde, pos1  recurrence and path model for the w-weight sums
// Weight identities involve lambda = Y_{n-1}X_n - q^n X_0 Y_{-1}, which only
// closes after X_i, Y_i take their values, so they are compared specialized.

#include <algorithm>
#include <map>
#include <stdexcept>

#include "asc/recurrence.hpp"
#include "asc/young.hpp"

namespace asc {

namespace {

using Predicate = std::function<bool(const Partition&)>;

XYPoly run(bool is_x, int from, int to) {
  XYPoly p = 1;
  for (int i = from; i <= to; ++i) p *= XYPoly::var(XYVar{is_x, i});
  return p;
}
XYPoly x_run(int from, int to) { return run(true, from, to); }
XYPoly y_run(int from, int to) { return run(false, from, to); }

XYPoly qbin(int n, int k) { return XYPoly::from_q(q_binomial(n, k)); }

// beta - e2 = q * Y_{-1}
XYPoly beta_minus_e2() { return XYPoly::q_pow(1) * XYPoly::Y(-1); }

// 1-based part access; 0 past the end.
int part(const Partition& mu, int i) { return i >= 1 && i <= static_cast<int>(mu.size()) ? mu[i - 1] : 0; }

Partition sorted_desc(Partition mu) {
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return mu;
}

bool erase_one(Partition& mu, int v) {
  auto it = std::find(mu.begin(), mu.end(), v);
  if (it == mu.end()) return false;
  mu.erase(it);
  return true;
}

Partition tail(const Partition& mu) { return Partition(mu.begin() + 1, mu.end()); }

Partition prepend(int v, const Partition& mu) {
  Partition out{v};
  out.insert(out.end(), mu.begin(), mu.end());
  return out;
}

bool fits(const Partition& mu, std::size_t len, int width) {
  if (mu.size() != len) return false;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0 || mu[i] > width) return false;
    if (i && mu[i] > mu[i - 1]) return false;
  }
  return true;
}

struct Ctx {
  int n, k;
  XYPoly lam;

  bool in_bx(const Partition& mu) const {
    const int l = s_m(n, mu);
    return l > 0 && part(mu, l + 1) == 2 * n;
  }
  bool in_by(const Partition& mu) const {
    const int l = s_m(n, mu);
    return l > 0 && part(mu, l + 1) == 2 * n + 1;
  }
  bool in_bhat(const Partition& mu) const { return s_m(n, mu) == 0 && s_m(n - 1, mu) == 0; }
  bool in_cx(const Partition& nu) const {
    const int idx = k - 1 - s_m(n, nu);
    return idx >= 1 && part(nu, idx) == 0;
  }
  bool in_cy(const Partition& nu) const {
    const int idx = k - 1 - s_m(n, nu);
    return idx >= 1 && part(nu, idx) == 1;
  }
  bool c_root(const Partition& nu) const { return k == 1 || part(nu, k - 1) >= 2; }
  bool b_root(const Partition& mu) const { return s_m(n - 1, mu) > 0; }

  XYPoly ubar(const Partition& mu) const {
    if (mu[0] <= 2 * n - 1) return weight_u(n - 1, mu);
    const XYPoly head = mu[0] == 2 * n ? XYPoly::X(n + k) : XYPoly::Y(n + k);
    return head * weight_u(n, tail(mu));
  }
  XYPoly v(const Partition& nu) const {
    return XYPoly::X(n + k) * weight_u(n, prepend(2 * n + 1, nu)) - lam * weight_u(n, nu);
  }

  // Bijection (a) and its inverse.
  Partition a_fwd(const Partition& mu) const {
    Partition nu;
    for (int i = 2; i <= k; ++i) nu.push_back(part(mu, i) + 2);
    return nu;
  }
  Partition a_inv(const Partition& nu) const {
    Partition mu{2 * n - 1};
    for (int p : nu) mu.push_back(p - 2);
    mu.push_back(0);
    return mu;
  }
  // Bijection (b): drop one 2n+1 and the 2n.
  Partition b_fwd(Partition mu) const {
    erase_one(mu, 2 * n + 1);
    erase_one(mu, 2 * n);
    return mu;
  }
  Partition b_inv(Partition nu) const {
    nu.push_back(2 * n + 1);
    nu.push_back(2 * n);
    return sorted_desc(std::move(nu));
  }
  // Bijection (c): drop two 2n+1 and turn a 0 into a 1.
  Partition c_fwd(Partition mu) const {
    erase_one(mu, 2 * n + 1);
    erase_one(mu, 2 * n + 1);
    if (erase_one(mu, 0)) mu.push_back(1);
    return sorted_desc(std::move(mu));
  }
  Partition c_inv(Partition nu) const {
    if (erase_one(nu, 1)) nu.push_back(0);
    nu.push_back(2 * n + 1);
    nu.push_back(2 * n + 1);
    return sorted_desc(std::move(nu));
  }
};

std::string pair_text(const Partition& x, const Partition& y) { return partition_text(x) + " <-> " + partition_text(y); }

// Domain/codomain filtered by predicates; fwd/inv must be mutually inverse.
template <class Fwd, class Inv>
void check_bijection(Report& rep, const std::string& name, const std::vector<Partition>& dom_all, const Predicate& in_dom,
                     std::size_t cod_len, int cod_width, const std::vector<Partition>& cod_all, const Predicate& in_cod,
                     std::size_t dom_len, int dom_width, Fwd fwd, Inv inv) {
  Tally t;
  std::size_t nd = 0, nc = 0;
  for (const auto& x : dom_all) {
    if (!in_dom(x)) continue;
    ++nd;
    const Partition y = fwd(x);
    t.record(fits(y, cod_len, cod_width) && in_cod(y) && inv(y) == x, [&] { return pair_text(x, y); });
  }
  for (const auto& y : cod_all) {
    if (!in_cod(y)) continue;
    ++nc;
    const Partition x = inv(y);
    t.record(fits(x, dom_len, dom_width) && in_dom(x) && fwd(x) == y, [&] { return pair_text(y, x); });
  }
  t.record(nd == nc, [&] { return "sizes " + std::to_string(nd) + " vs " + std::to_string(nc); });
  rep.add(name, t.pass(), std::to_string(nd) + " pairs; " + t.summary());
}

void check_cover(Report& rep, const std::string& name, const std::vector<Partition>& all,
                 const std::vector<std::vector<Partition>>& blocks) {
  std::map<Partition, int> hits;
  for (const auto& mu : all) hits[mu] = 0;
  Tally t;
  for (const auto& block : blocks)
    for (const auto& mu : block) {
      auto it = hits.find(mu);
      t.record(it != hits.end(), [&] { return "stray " + partition_text(mu); });
      if (it != hits.end()) ++it->second;
    }
  for (const auto& [mu, h] : hits) t.record(h == 1, [&] { return partition_text(mu) + " covered " + std::to_string(h) + "x"; });
  rep.add(name, t.pass(), std::to_string(blocks.size()) + " blocks; " + t.summary());
}

void check_equal(Tally& t, const XYPoly& lhs, const XYPoly& rhs, const std::function<std::string()>& where) {
  t.record(specialize_xy(lhs) == specialize_xy(rhs), where);
}

XYPoly prop1_sum(int k) {
  XYPoly s;
  for (int i = 0; i <= k; ++i) s += qbin(k, i) * x_run(0, i - 1) * y_run(0, k - i - 1);
  return s;
}

void check_lemmas(Report& rep, int top, const std::string& tag) {
  Tally lem, p1, l219;
  for (int k = 1; k <= top; ++k) {
    const XYPoly lam = lam_xy(k);
    for (int i = 1; i <= k + 1; ++i) {
      const XYPoly lhs = qbin(k + 1, i) * XYPoly::X(i - 1) * XYPoly::Y(k - i);
      const XYPoly rhs = qbin(k, i - 1) * XYPoly::X(k) * XYPoly::Y(k - i) + qbin(k, i) * XYPoly::X(i - 1) * XYPoly::Y(k) -
                         lam * qbin(k - 1, i - 1);
      check_equal(lem, lhs, rhs, [&] { return "k=" + std::to_string(k) + " i=" + std::to_string(i); });
    }
    check_equal(p1, prop1_sum(k + 1), b_xy(k) * prop1_sum(k) - lam * prop1_sum(k - 1),
                [&] { return "k=" + std::to_string(k); });
    p1.record(prop1_sum(k) == coeff_young_xy(0, k), [&] { return "width-1 sum k=" + std::to_string(k); });
  }
  for (int n = 1; n <= top; ++n)
    for (int l = 0; n - l - 1 >= 0; ++l) {
      XYPoly lhs = y_run(n - l - 1, n - 1), inner_rhs, tail_rhs;
      for (int i = 1; i <= l + 1; ++i) {
        lhs += y_run(n - l - 1, n - i - 1) * qbin(n + 1, i) * y_run(0, i - 1);
        inner_rhs += y_run(n - l - 1, n - i - 1) * qbin(n, i - 1) * y_run(0, i - 2);
      }
      for (int i = 0; i <= l; ++i) tail_rhs += XYPoly::q_pow(n - i - 1) * y_run(n - l - 1, n - i - 2) * qbin(n, i) * y_run(0, i - 1);
      const XYPoly rhs = qbin(n, l + 1) * y_run(0, l) + XYPoly::Y(n) * inner_rhs + beta_minus_e2() * tail_rhs;
      check_equal(l219, lhs, rhs, [&] { return "n=" + std::to_string(n) + " l=" + std::to_string(l); });
    }
  rep.add("lem " + tag, lem.pass(), lem.summary());
  rep.add("prop1 " + tag, p1.pass(), p1.summary());
  rep.add("219 " + tag, l219.pass(), l219.summary());
}

XYPoly z_product(const Partition& nu, int from, int to, int k) {
  XYPoly p = 1;
  for (int i = from; i <= to; ++i) p *= XYPoly::var(z_var(part(nu, i) + 2 * (k - 1 - i)));
  return p;
}

}  // namespace

int s_bar(int n, std::span<const int> nu) {
  int twos = 0, tops = 0;
  for (int p : nu) {
    twos += p == 2;
    tops += p == 2 * n + 1;
  }
  return std::min(twos, tops);
}

std::vector<Partition> block_b(int n, const Partition& nu) {
  const int l = s_m(n - 1, nu);
  if (l <= 0) throw std::invalid_argument("block_b needs s_{n-1}(nu) > 0");
  std::vector<Partition> out;
  for (int j = 0; j <= l; ++j) {
    Partition mu = nu;
    for (int i = 0; i < j; ++i) mu[static_cast<std::size_t>(i)] = 2 * n + 1;
    out.push_back(std::move(mu));
  }
  return out;
}

std::vector<Partition> block_c(int n, const Partition& nu) {
  if (!nu.empty() && nu.back() < 2) throw std::invalid_argument("block_c needs last part >= 2");
  const int l = s_bar(n, nu);
  std::vector<Partition> out;
  for (int i = 0; i <= l; ++i) {
    Partition mu = nu;
    for (int j = 0; j < i; ++j) mu[mu.size() - 1 - static_cast<std::size_t>(j)] = 0;
    out.push_back(std::move(mu));
  }
  return out;
}

Report verify_section3(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("verify_section3 needs n, k >= 1");
  const std::string tag = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  Report rep("section3");
  const Ctx c{n, k, lam_xy(n + k)};
  const int W = 2 * n + 1;
  const std::size_t big_len = static_cast<std::size_t>(k + 1), small_len = static_cast<std::size_t>(k - 1);
  const auto big = enumerate_partitions(k + 1, W);
  const auto small = enumerate_partitions(k - 1, W);
  const auto narrow = enumerate_partitions(k + 1, 2 * n - 1);

  std::vector<Partition> bhat, bx, by;
  for (const auto& mu : big) {
    if (c.in_bhat(mu)) bhat.push_back(mu);
    if (c.in_bx(mu)) bx.push_back(mu);
    if (c.in_by(mu)) by.push_back(mu);
  }
  std::vector<Partition> b_roots, c_roots, cx, cy;
  for (const auto& mu : narrow)
    if (c.b_root(mu)) b_roots.push_back(mu);
  for (const auto& nu : small) {
    if (c.c_root(nu)) c_roots.push_back(nu);
    if (c.in_cx(nu)) cx.push_back(nu);
    if (c.in_cy(nu)) cy.push_back(nu);
  }

  // decom
  {
    std::vector<std::vector<Partition>> blocks{bhat, bx, by};
    for (const auto& r : b_roots) blocks.push_back(block_b(n, r));
    check_cover(rep, "decom_b " + tag, big, blocks);
  }
  {
    std::vector<std::vector<Partition>> blocks{cx, cy};
    for (const auto& r : c_roots) blocks.push_back(block_c(n, r));
    check_cover(rep, "decom_c " + tag, small, blocks);
  }

  // bi
  check_bijection(
      rep, "bi_a " + tag, narrow, [&](const Partition& mu) { return c.b_root(mu); }, small_len, W, small,
      [&](const Partition& nu) { return c.c_root(nu); }, big_len, 2 * n - 1,
      [&](const Partition& mu) { return c.a_fwd(mu); }, [&](const Partition& nu) { return c.a_inv(nu); });
  check_bijection(
      rep, "bi_b " + tag, big, [&](const Partition& mu) { return c.in_bx(mu); }, small_len, W, small,
      [&](const Partition& nu) { return c.in_cx(nu); }, big_len, W, [&](const Partition& mu) { return c.b_fwd(mu); },
      [&](const Partition& nu) { return c.b_inv(nu); });
  check_bijection(
      rep, "bi_c " + tag, big, [&](const Partition& mu) { return c.in_by(mu); }, small_len, W, small,
      [&](const Partition& nu) { return c.in_cy(nu); }, big_len, W, [&](const Partition& mu) { return c.c_fwd(mu); },
      [&](const Partition& nu) { return c.c_inv(nu); });

  // re
  {
    Tally ta, tb, tc, td;
    for (const auto& mu : bhat)
      check_equal(ta, weight_u(n, mu), c.ubar(mu), [&] { return partition_text(mu); });
    for (const auto& r : b_roots) {
      const Partition nu = c.a_fwd(r);
      XYPoly lhs, rhs;
      for (const auto& mu : block_b(n, r)) {
        lhs += weight_u(n, mu);
        rhs += c.ubar(mu);
      }
      for (const auto& x : block_c(n, nu)) rhs += c.v(x);
      check_equal(tb, lhs, rhs, [&] { return pair_text(r, nu); });
    }
    for (const auto& mu : bx) {
      const Partition nu = c.b_fwd(mu);
      check_equal(tc, weight_u(n, mu), c.ubar(mu) + c.v(nu), [&] { return pair_text(mu, nu); });
    }
    for (const auto& mu : by) {
      const Partition nu = c.c_fwd(mu);
      check_equal(td, weight_u(n, mu), c.ubar(mu) + c.v(nu), [&] { return pair_text(mu, nu); });
    }
    rep.add("re_a " + tag, ta.pass(), ta.summary());
    rep.add("re_b " + tag, tb.pass(), tb.summary());
    rep.add("re_c " + tag, tc.pass(), tc.summary());
    rep.add("re_d " + tag, td.pass(), td.summary());

    XYPoly lhs, rhs;
    for (const auto& mu : big) {
      lhs += weight_u(n, mu);
      rhs += c.ubar(mu);
    }
    for (const auto& nu : small) rhs += c.v(nu);
    rep.add("re_total " + tag, specialize_xy(lhs) == specialize_xy(rhs));
  }

  // as
  {
    Tally ta, tb;
    for (const auto& nu : small) {
      const int l = s_m(n, nu);
      if (c.in_cx(nu)) {
        const XYPoly closed = x_run(0, l) * XYPoly::X(n + k - l - 1) * z_product(nu, l + 1, k - 2 - l, k) *
                              y_run(0, l - 1) * XYPoly::q_pow(l) * qbin(n + k, l + 1) * beta_minus_e2();
        check_equal(ta, c.v(nu), closed, [&] { return partition_text(nu); });
      } else {
        const XYPoly closed = x_run(0, l) * z_product(nu, l + 1, k - 1 - l, k) * y_run(0, l - 1) *
                              XYPoly::q_pow(n + k - l - 1) * qbin(n + k, l) * beta_minus_e2();
        check_equal(tb, c.v(nu), closed, [&] { return partition_text(nu); });
      }
    }
    rep.add("as_a " + tag, ta.pass(), ta.summary());
    rep.add("as_b " + tag, tb.pass(), tb.summary());
  }

  check_lemmas(rep, n + k, tag);

  // tilde recurrence and path model
  {
    const XYPoly lhs = coeff_tilde(n, k + 1);
    const XYPoly rhs = coeff_tilde(n - 1, k + 1) + b_xy(n + k) * coeff_tilde(n, k) -
                       XYPoly::Y(n + k - 1) * XYPoly::X(n + k) * coeff_tilde(n, k - 1);
    rep.add("tilde " + tag, lhs == rhs);
    rep.add("pos1 " + tag, lattice_path_oracle(n, k) == coeff_tilde(n, k));
  }
  return rep;
}

Report verify_weight_modification(int max_total) {
  Report rep("section3");
  Tally a0, be2;
  const std::pair<Var, ParamPoly> at_b[] = {{Var::b, ParamPoly::var(Var::e2)}};
  for (int total = 0; total <= max_total; ++total)
    for (int l = 0; l <= total; ++l) {
      const int width = total - l;
      for_each_partition(l, width, [&](const Partition& mu) {
        const ParamPoly w = specialize_xy(weight_w(mu));
        const ParamPoly w0 = substitute(w, Var::a, ParamPoly(0)), wb = substitute(w, at_b);
        for (int m = std::max(0, width / 2); m <= 4; ++m) {
          const ParamPoly u = specialize_xy(weight_u(m, mu));
          auto where = [&] { return "m=" + std::to_string(m) + " " + partition_text(mu); };
          a0.record(substitute(u, Var::a, ParamPoly(0)) == w0, where);
          be2.record(substitute(u, at_b) == wb, where);
        }
      });
    }
  rep.add("mod_a0 (l+width<=" + std::to_string(max_total) + ")", a0.pass(), a0.summary());
  rep.add("mod_b_e2 (l+width<=" + std::to_string(max_total) + ")", be2.pass(), be2.summary());
  return rep;
}

}  // namespace asc
