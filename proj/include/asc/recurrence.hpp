#pragma once

// Three-term recurrences p_{n+1} = (x + s*b_n) p_n - lam_n p_{n-1} with
// p_{-1} = 0, p_0 = 1, and the coefficient array g_{n,i} = [x^i] p_n.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "asc/param_poly.hpp"
#include "asc/xy_poly.hpp"

namespace asc {

/// Dense polynomial in x with ParamPoly coefficients; coeffs[i] = [x^i].
struct XPoly {
  std::vector<ParamPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// [x^i]; zero outside 0..degree.
  ParamPoly coeff(int i) const;
};

struct RecurrenceSpec {
  std::string name;
  std::function<ParamPoly(int)> b;    ///< n >= 0
  std::function<ParamPoly(int)> lam;  ///< n >= 1
  /// +1 for (x + b_n), -1 for (x - b_n).
  int level_sign = 1;
};

RecurrenceSpec spec_hat();
/// spec_hat with e1 = e2 = a*b.
RecurrenceSpec spec_prime();
/// spec_hat with a -> xi*a, e1 -> xi*a*b, e2 -> a*b.
RecurrenceSpec spec_fugacity();
/// "hat", "prime" or "fugacity"; throws std::invalid_argument otherwise.
RecurrenceSpec spec_by_name(const std::string& name);

/// b_n and lam_n of spec_hat written in X and Y:
/// b_n = X_n + Y_n, lam_n = Y_{n-1} X_n - q^n X_0 Y_{-1}.
XYPoly b_xy(int n);
XYPoly lam_xy(int n);

/// p_0 .. p_N.
std::vector<XPoly> polys(const RecurrenceSpec& spec, int N);

/// g_{n,i} = [x^i] p_n for spec_hat, cached; 0 for i > n.
ParamPoly g(int n, int i);
/// [x^i] p_n for an arbitrary spec (not cached).
ParamPoly g(const RecurrenceSpec& spec, int n, int i);

/// C(n,k) prod_{i=n-k}^{n-1} (a + b + i*a*b); zero when k is out of range.
ParamPoly q1_closed_form(int n, int k);

// ---------------------------------------------------------------------------
// Classical three-parameter family at rational points

/// Classical monic family with b_n = (A+B) q^n / 2 and
/// lam_n = (1 - q^n)(1 - A B q^{n-1}) / 4, recurrence with (x - b_n).
std::vector<std::vector<Rational>> classical_polys(const Rational& A, const Rational& B, const Rational& q,
                                                   int N);

/// The classical parameters (A, B) attached to (q, a, b) by
/// A = (1 - q - a)/a, B = (1 - q - b)/b. Throws std::invalid_argument when
/// q = 1, a = 0 or b = 0.
std::pair<Rational, Rational> classical_params(const RationalPoint& pt);

/// Seeded rational sample points with q, a, b avoiding 0 and 1.
std::vector<RationalPoint> sample_points(std::uint64_t seed, int count);

/// Checks [x^n] p_{n+k} = sum_i C(n+i, n) ((q-1)/(2ab))^{k-i} [x^{n+i}] p'_{n+k}
/// at every point, with p the classical family and p' = spec_prime.
bool verify_classical_bridge(int n, int k, const std::vector<RationalPoint>& points);

}  // namespace asc
