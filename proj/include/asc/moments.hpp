#pragma once

// Moments of three-term recurrences as weighted Motzkin path sums, the PASEP
// partition function and its fugacity analogue.

#include <cstdint>
#include <string>
#include <vector>

#include "asc/param_poly.hpp"
#include "asc/recurrence.hpp"
#include "asc/report.hpp"

namespace asc {

/// mu_0 .. mu_N. Up steps weigh 1, a level step at height h weighs
/// -level_sign * b_h, a down step from height h weighs lam_h.
std::vector<ParamPoly> moments(const RecurrenceSpec& spec, int N);

/// Moments of the classical family of classical_polys at a rational point.
std::vector<Rational> classical_moments(const Rational& A, const Rational& B, const Rational& q, int N);

/// (-1)^N mu_N of spec_prime.
ParamPoly z_n(int N);
/// (-1)^N mu_N of spec_fugacity.
ParamPoly z_fugacity(int N);

/// det (mu_{i+j})_{0 <= i,j <= m}.
ParamPoly hankel_det(const std::vector<ParamPoly>& mu, int m);
/// prod_{i=1}^m lam_i^{m+1-i}.
ParamPoly hankel_product(const RecurrenceSpec& spec, int m);

/// Exponent on 2ab/(1-q) in the PASEP sum over k of C(N,k) (.)^e mu_{N-k}.
enum class PasepReading { verbatim, k_exponent };
std::string reading_name(PasepReading r);

/// Z_N at each point against the sum built from classical moments at
/// A = (1-q-a)/a, B = (1-q-b)/b. Throws std::invalid_argument at a point with
/// q = 1, a = 0 or b = 0.
bool verify_pasep_identity(int N, const std::vector<RationalPoint>& points,
                           PasepReading reading = PasepReading::verbatim);

struct PasepOutcome {
  bool verbatim = false;
  /// Only tried when the verbatim reading fails.
  bool k_exponent_tried = false;
  bool k_exponent = false;

  bool validated() const { return verbatim || k_exponent; }
  /// "verbatim", "k_exponent" or "none".
  std::string reading() const;
};

/// Every N in 0..max_N under the verbatim reading, falling back to the
/// k-exponent reading if any N fails.
PasepOutcome validate_pasep(int max_N, const std::vector<RationalPoint>& points);

struct PasepRanges {
  int z = 8;
  int fugacity = 6;
  int hankel = 4;
  int orthogonality = 8;
  int pasep = 5;
  int bridge = 6;
  int points = 20;
  std::uint64_t seed = 20240601;

  static PasepRanges uniform(int max);
};

Report verify_pasep_suite(const PasepRanges& r = {});

}  // namespace asc
