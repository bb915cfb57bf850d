#include "asc/moments.hpp"

#include "asc/minors.hpp"

namespace asc {

namespace {

// Motzkin path DP; level(h) and down(h) are the step weights.
template <class T, class Level, class Down>
std::vector<T> motzkin(int N, Level&& level, Down&& down) {
  if (N < 0) throw std::invalid_argument("moment order must be nonnegative");
  std::vector<T> lev, dn;  // lev[h], dn[h] (dn[0] unused)
  const int top = N / 2 + 1;
  for (int h = 0; h <= top; ++h) {
    lev.push_back(level(h));
    dn.push_back(h == 0 ? T(0) : down(h));
  }
  std::vector<T> mu{T(1)};
  std::vector<T> at{T(1)};  // at[h]: paths of the current length ending at height h
  for (int step = 1; step <= N; ++step) {
    // Heights above N - step can no longer return to 0.
    const int reach = std::min(step, N - step);
    std::vector<T> next(static_cast<std::size_t>(reach) + 1, T(0));
    for (int h = 0; h <= reach; ++h) {
      T v(0);
      if (h >= 1 && h - 1 < static_cast<int>(at.size())) v += at[static_cast<std::size_t>(h - 1)];
      if (h < static_cast<int>(at.size())) v += at[static_cast<std::size_t>(h)] * lev[static_cast<std::size_t>(h)];
      if (h + 1 < static_cast<int>(at.size()))
        v += at[static_cast<std::size_t>(h + 1)] * dn[static_cast<std::size_t>(h + 1)];
      next[static_cast<std::size_t>(h)] = v;
    }
    at = std::move(next);
    mu.push_back(at[0]);
  }
  return mu;
}

}  // namespace

std::vector<ParamPoly> moments(const RecurrenceSpec& spec, int N) {
  const ParamPoly sign(-spec.level_sign);
  return motzkin<ParamPoly>(N, [&](int h) { return sign * spec.b(h); }, [&](int h) { return spec.lam(h); });
}

std::vector<Rational> classical_moments(const Rational& A, const Rational& B, const Rational& q, int N) {
  auto qpow = [&](int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  return motzkin<Rational>(
      N, [&](int h) { return Rational((A + B) * qpow(h) / 2); },
      [&](int h) { return Rational((1 - qpow(h)) * (1 - A * B * qpow(h - 1)) / 4); });
}

namespace {

ParamPoly signed_moment(const RecurrenceSpec& spec, int N) {
  const ParamPoly mu = moments(spec, N).back();
  return N % 2 == 0 ? mu : -mu;
}

}  // namespace

ParamPoly z_n(int N) { return signed_moment(spec_prime(), N); }
ParamPoly z_fugacity(int N) { return signed_moment(spec_fugacity(), N); }

ParamPoly hankel_det(const std::vector<ParamPoly>& mu, int m) {
  if (m < 0 || 2 * m >= static_cast<int>(mu.size())) throw std::invalid_argument("not enough moments for Hankel order");
  Matrix h(static_cast<std::size_t>(m) + 1, std::vector<ParamPoly>(static_cast<std::size_t>(m) + 1));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mu[static_cast<std::size_t>(i + j)];
  return det_bareiss(std::move(h));
}

ParamPoly hankel_product(const RecurrenceSpec& spec, int m) {
  ParamPoly p = 1;
  for (int i = 1; i <= m; ++i) p *= spec.lam(i).pow(static_cast<unsigned>(m + 1 - i));
  return p;
}

std::string reading_name(PasepReading r) { return r == PasepReading::verbatim ? "verbatim" : "k_exponent"; }

bool verify_pasep_identity(int N, const std::vector<RationalPoint>& points, PasepReading reading) {
  if (N < 0) throw std::invalid_argument("PASEP size must be nonnegative");
  const ParamPoly z = z_n(N);
  for (const auto& pt : points) {
    const auto [A, B] = classical_params(pt);
    const std::vector<Rational> mu = classical_moments(A, B, pt.q, N);
    const Rational c = 2 * pt.a * pt.b / (1 - pt.q);
    auto cpow = [&](int e) {
      Rational r = 1;
      for (int i = 0; i < e; ++i) r *= c;
      return r;
    };
    Rational rhs = 0;
    for (int k = 0; k <= N; ++k)
      rhs += Rational(binomial(N, k)) * cpow(reading == PasepReading::verbatim ? N : k) *
             mu[static_cast<std::size_t>(N - k)];
    RationalPoint at = pt;
    at.e1 = at.e2 = pt.a * pt.b;
    if (eval_rational(z, at) != rhs) return false;
  }
  return true;
}

std::string PasepOutcome::reading() const {
  if (verbatim) return "verbatim";
  if (k_exponent) return "k_exponent";
  return "none";
}

PasepOutcome validate_pasep(int max_N, const std::vector<RationalPoint>& points) {
  PasepOutcome out;
  auto all = [&](PasepReading r) {
    for (int N = 0; N <= max_N; ++N)
      if (!verify_pasep_identity(N, points, r)) return false;
    return true;
  };
  out.verbatim = all(PasepReading::verbatim);
  if (!out.verbatim) {
    out.k_exponent_tried = true;
    out.k_exponent = all(PasepReading::k_exponent);
  }
  return out;
}

PasepRanges PasepRanges::uniform(int max) {
  PasepRanges r;
  r.z = r.fugacity = r.orthogonality = r.pasep = r.bridge = max;
  r.hankel = std::min(max, 4);
  return r;
}

namespace {

std::string cap(const std::string& what, int max) { return " (" + what + "<=" + std::to_string(max) + ")"; }

}  // namespace

Report verify_pasep_suite(const PasepRanges& r) {
  Report rep("pasep");
  {
    Tally t;
    for (int N = 0; N <= r.z; ++N) t.record(is_nonneg(z_n(N)), [&] { return "N=" + std::to_string(N); });
    rep.add("z_nonneg" + cap("N", r.z), t.pass(), t.summary());
  }
  {
    Tally t;
    for (int N = 0; N <= r.fugacity; ++N) {
      const ParamPoly z = z_fugacity(N);
      t.record(is_nonneg(z) && substitute(z, Var::xi, ParamPoly(1)) == z_n(N),
               [&] { return "N=" + std::to_string(N); });
    }
    rep.add("z_fugacity" + cap("N", r.fugacity), t.pass(), t.summary());
  }
  {
    Tally t;
    for (const RecurrenceSpec& spec : {spec_hat(), spec_prime()}) {
      const auto mu = moments(spec, 2 * r.hankel);
      for (int m = 0; m <= r.hankel; ++m)
        t.record(hankel_det(mu, m) == hankel_product(spec, m),
                 [&] { return spec.name + " m=" + std::to_string(m); });
    }
    rep.add("hankel" + cap("m", r.hankel), t.pass(), t.summary());
  }
  {
    Tally t;
    const auto mu = moments(spec_hat(), r.orthogonality);
    for (int n = 1; n <= r.orthogonality; ++n) {
      ParamPoly s;
      for (int i = 0; i <= n; ++i) s += g(n, i) * mu[static_cast<std::size_t>(i)];
      t.record(s.is_zero(), [&] { return "n=" + std::to_string(n); });
    }
    rep.add("orthogonality" + cap("n", r.orthogonality), t.pass(), t.summary());
  }
  const auto points = sample_points(r.seed, r.points);
  {
    const PasepOutcome o = validate_pasep(r.pasep, points);
    std::string detail = "reading: " + o.reading() + ", verbatim " + (o.verbatim ? "holds" : "fails");
    if (o.k_exponent_tried) detail += std::string(", k-exponent ") + (o.k_exponent ? "holds" : "fails");
    detail += ", " + std::to_string(points.size()) + " points";
    rep.add("pasep_identity" + cap("N", r.pasep), o.validated(), detail);
  }
  {
    Tally t;
    for (int n = 0; n <= r.bridge; ++n)
      for (int k = 0; n + k <= r.bridge; ++k)
        t.record(verify_classical_bridge(n, k, points),
                 [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    rep.add("classical_bridge" + cap("n+k", r.bridge), t.pass(), t.summary() + ", " + std::to_string(points.size()) + " points");
  }
  return rep;
}

}  // namespace asc
