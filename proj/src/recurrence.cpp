#include "asc/recurrence.hpp"

#include <mutex>
#include <random>
#include <stdexcept>

namespace asc {

namespace {

const ParamPoly& pa() {
  static const ParamPoly v = ParamPoly::var(Var::a);
  return v;
}
const ParamPoly& pb() {
  static const ParamPoly v = ParamPoly::var(Var::b);
  return v;
}
const ParamPoly& pe1() {
  static const ParamPoly v = ParamPoly::var(Var::e1);
  return v;
}
const ParamPoly& pe2() {
  static const ParamPoly v = ParamPoly::var(Var::e2);
  return v;
}

ParamPoly hat_b(int n) {
  if (n < 0) throw std::invalid_argument("b_n needs n >= 0");
  return (pa() + pb()) * q_pow(n) + (pe1() + pe2()) * q_int(n);
}

ParamPoly hat_lam(int n) {
  if (n < 1) throw std::invalid_argument("lambda_n needs n >= 1");
  return pe1() * pe2() * q_int(n) * q_int(n - 1) + (pa() * pe2() + pb() * pe1()) * q_pow(n - 1) * q_int(n) +
         pa() * pb() * (q_pow(2 * n - 1) - q_pow(n - 1));
}

ParamPoly prime_substitute(const ParamPoly& p) {
  const ParamPoly ab = pa() * pb();
  const std::pair<Var, ParamPoly> subs[] = {{Var::e1, ab}, {Var::e2, ab}};
  return substitute(p, subs);
}

ParamPoly fugacity_substitute(const ParamPoly& p) {
  const ParamPoly xi = ParamPoly::var(Var::xi);
  const ParamPoly ab = pa() * pb();
  const std::pair<Var, ParamPoly> subs[] = {{Var::a, xi * pa()}, {Var::e1, xi * ab}, {Var::e2, ab}};
  return substitute(p, subs);
}

}  // namespace

ParamPoly XPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs[static_cast<std::size_t>(i)];
}

RecurrenceSpec spec_hat() { return {"hat", hat_b, hat_lam, 1}; }

RecurrenceSpec spec_prime() {
  return {"prime", [](int n) { return prime_substitute(hat_b(n)); },
          [](int n) { return prime_substitute(hat_lam(n)); }, 1};
}

RecurrenceSpec spec_fugacity() {
  return {"fugacity", [](int n) { return fugacity_substitute(hat_b(n)); },
          [](int n) { return fugacity_substitute(hat_lam(n)); }, 1};
}

RecurrenceSpec spec_by_name(const std::string& name) {
  if (name == "hat") return spec_hat();
  if (name == "prime") return spec_prime();
  if (name == "fugacity") return spec_fugacity();
  throw std::invalid_argument("unknown recurrence spec '" + name + "'");
}

XYPoly b_xy(int n) { return XYPoly::X(n) + XYPoly::Y(n); }

XYPoly lam_xy(int n) {
  if (n < 1) throw std::invalid_argument("lambda_n needs n >= 1");
  return XYPoly::Y(n - 1) * XYPoly::X(n) - XYPoly::q_pow(n) * XYPoly::X(0) * XYPoly::Y(-1);
}

std::vector<XPoly> polys(const RecurrenceSpec& spec, int N) {
  if (N < 0) throw std::invalid_argument("polys needs N >= 0");
  std::vector<XPoly> p;
  p.reserve(static_cast<std::size_t>(N) + 1);
  p.push_back(XPoly{{ParamPoly(1)}});
  for (int n = 0; n < N; ++n) {
    const XPoly& cur = p.back();
    const ParamPoly bn = spec.level_sign > 0 ? spec.b(n) : -spec.b(n);
    XPoly next;
    next.coeffs.assign(static_cast<std::size_t>(n) + 2, ParamPoly());
    for (int i = 0; i <= n; ++i) {
      next.coeffs[static_cast<std::size_t>(i) + 1] += cur.coeffs[static_cast<std::size_t>(i)];
      next.coeffs[static_cast<std::size_t>(i)] += bn * cur.coeffs[static_cast<std::size_t>(i)];
    }
    if (n >= 1) {
      const ParamPoly lam = spec.lam(n);
      const XPoly& prev = p[static_cast<std::size_t>(n) - 1];
      for (int i = 0; i < n; ++i) next.coeffs[static_cast<std::size_t>(i)] -= lam * prev.coeffs[static_cast<std::size_t>(i)];
    }
    p.push_back(std::move(next));
  }
  return p;
}

ParamPoly g(int n, int i) {
  if (n < 0 || i < 0) throw std::invalid_argument("g needs n, i >= 0");
  if (i > n) return {};
  static std::mutex mu;
  static std::vector<XPoly> cache;
  std::lock_guard lock(mu);
  if (static_cast<int>(cache.size()) <= n) cache = polys(spec_hat(), std::max(n, 2 * static_cast<int>(cache.size())));
  return cache[static_cast<std::size_t>(n)].coeff(i);
}

ParamPoly g(const RecurrenceSpec& spec, int n, int i) {
  if (n < 0 || i < 0) throw std::invalid_argument("g needs n, i >= 0");
  if (i > n) return {};
  return polys(spec, n).back().coeff(i);
}

ParamPoly q1_closed_form(int n, int k) {
  if (k < 0 || k > n) return {};
  ParamPoly r = binomial(n, k);
  for (int i = n - k; i <= n - 1; ++i) r *= pa() + pb() + (pa() * pb()).scaled(i);
  return r;
}

// ---------------------------------------------------------------------------
// Classical family

std::vector<std::vector<Rational>> classical_polys(const Rational& A, const Rational& B, const Rational& q, int N) {
  std::vector<std::vector<Rational>> p;
  p.push_back({Rational(1)});
  Rational qn = 1;  // q^n
  Rational qn1 = 0;  // q^{n-1}
  for (int n = 0; n < N; ++n) {
    const Rational bn = (A + B) * qn / 2;
    std::vector<Rational> next(static_cast<std::size_t>(n) + 2, Rational(0));
    const auto& cur = p.back();
    for (int i = 0; i <= n; ++i) {
      next[static_cast<std::size_t>(i) + 1] += cur[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(i)] -= bn * cur[static_cast<std::size_t>(i)];
    }
    if (n >= 1) {
      const Rational lam = (1 - qn) * (1 - A * B * qn1) / 4;
      const auto& prev = p[static_cast<std::size_t>(n) - 1];
      for (int i = 0; i < n; ++i) next[static_cast<std::size_t>(i)] -= lam * prev[static_cast<std::size_t>(i)];
    }
    p.push_back(std::move(next));
    qn1 = qn;
    qn *= q;
  }
  return p;
}

std::pair<Rational, Rational> classical_params(const RationalPoint& pt) {
  if (pt.q == 1 || pt.q == 0 || pt.a == 0 || pt.b == 0)
    throw std::invalid_argument("classical parameters need q not in {0, 1} and a, b nonzero");
  Rational A = (1 - pt.q - pt.a) / pt.a;
  Rational B = (1 - pt.q - pt.b) / pt.b;
  A.canonicalize();
  B.canonicalize();
  return {A, B};
}

std::vector<RationalPoint> sample_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  auto draw = [&](bool avoid_zero, bool avoid_one) {
    for (;;) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      if ((avoid_zero && r == 0) || (avoid_one && r == 1)) continue;
      return r;
    }
  };
  std::vector<RationalPoint> pts;
  for (int i = 0; i < count; ++i) {
    RationalPoint p;
    p.q = draw(true, true);
    p.a = draw(true, false);
    p.b = draw(true, false);
    p.e1 = draw(false, false);
    p.e2 = draw(false, false);
    p.xi = draw(false, false);
    pts.push_back(std::move(p));
  }
  return pts;
}

bool verify_classical_bridge(int n, int k, const std::vector<RationalPoint>& points) {
  if (n < 0 || k < 0) throw std::invalid_argument("bridge needs n, k >= 0");
  const XPoly prime = polys(spec_prime(), n + k).back();
  for (const auto& pt : points) {
    const auto [A, B] = classical_params(pt);
    const auto classical = classical_polys(A, B, pt.q, n + k);
    const Rational lhs = classical.back()[static_cast<std::size_t>(n)];
    const Rational c = (pt.q - 1) / (2 * pt.a * pt.b);
    Rational rhs = 0;
    Rational cpow = 1;  // c^{k-i}, built from i = k downwards
    for (int i = k; i >= 0; --i) {
      rhs += Rational(binomial(n + i, n)) * cpow * eval_rational(prime.coeff(n + i), pt);
      cpow *= c;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace asc
