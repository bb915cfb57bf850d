#pragma once

// Exact arithmetic in Z[q, q^-1][a, b, e1, e2, xi].
//
// A ParamPoly is a sparse sum of terms c * q^i a^j b^k e1^l e2^m xi^n with
// arbitrary-precision integer coefficients. Only the q exponent may be
// negative. Terms are kept sorted by the graded-lexicographic monomial order
// on the exponent vector (e_q, e_a, e_b, e_e1, e_e2, e_xi), so two equal
// polynomials always have identical term vectors.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace asc {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Var : int { q = 0, a = 1, b = 2, e1 = 3, e2 = 4, xi = 5 };
inline constexpr int kNumVars = 6;

std::string_view var_name(Var v);

/// Exponent vector packed into one 64-bit word.
///
/// Layout (high to low): total degree (12 bits, biased), q (12 bits, biased),
/// then a, b, e1, e2, xi with 8 bits each. Comparing the packed words
/// compares monomials in graded-lex order.
class Monomial {
 public:
  using Exponents = std::array<int, kNumVars>;

  static constexpr int kSignedBits = 12;
  static constexpr int kSignedBias = 1 << (kSignedBits - 1);
  static constexpr int kUnsignedBits = 8;
  static constexpr int kMaxUnsigned = (1 << kUnsignedBits) - 1;

  constexpr Monomial() = default;
  explicit Monomial(const Exponents& e);

  static Monomial of(Var v, int e = 1);
  static constexpr Monomial from_key(std::uint64_t key) { return Monomial(key, 0); }

  int exp(Var v) const;
  Exponents exponents() const;
  int degree() const;
  bool is_one() const { return key_ == kOneKey; }
  std::uint64_t key() const { return key_; }

  /// Checked product; throws std::overflow_error if an exponent leaves its field.
  friend Monomial operator*(Monomial x, Monomial y);
  /// Exact quotient; throws std::domain_error if y does not divide x
  /// (the q exponent may go negative).
  friend Monomial operator/(Monomial x, Monomial y);
  bool divides(Monomial other) const;

  friend constexpr auto operator<=>(Monomial, Monomial) = default;

  static constexpr std::uint64_t kOneKey =
      (std::uint64_t(kSignedBias) << 52) | (std::uint64_t(kSignedBias) << 40);

 private:
  constexpr Monomial(std::uint64_t key, int) : key_(key) {}
  std::uint64_t key_ = kOneKey;
};

class ParamPoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  ParamPoly() = default;
  ParamPoly(long c);  // NOLINT(google-explicit-constructor): constants lift implicitly
  ParamPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static ParamPoly var(Var v, int e = 1);
  static ParamPoly term(Monomial m, Integer c);
  /// Builds a canonical polynomial from arbitrary terms (duplicates merged,
  /// zeros dropped).
  static ParamPoly from_terms(std::vector<Term> terms);

  /// Terms in ascending monomial order.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(Monomial m) const;
  /// Largest monomial in the order; the polynomial must be nonzero.
  const Term& leading() const { return terms_.back(); }

  /// Smallest and largest exponent of v over all terms (0,0 for zero).
  std::pair<int, int> exp_range(Var v) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);

  friend ParamPoly operator+(const ParamPoly& x, const ParamPoly& y);
  friend ParamPoly operator-(const ParamPoly& x, const ParamPoly& y);
  friend ParamPoly operator-(const ParamPoly& x);
  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
  friend bool operator==(const ParamPoly& x, const ParamPoly& y);

  ParamPoly scaled(const Integer& c) const;
  /// Multiplies every term by the monomial m.
  ParamPoly shifted(Monomial m) const;
  ParamPoly pow(unsigned e) const;

 private:
  std::vector<Term> terms_;
};

/// Hash-based running sum for adding many polynomials.
class ParamPolyAccumulator {
 public:
  void add(const ParamPoly& p);
  void add(const ParamPoly& p, const Integer& scale);
  ParamPoly take();

 private:
  std::unordered_map<std::uint64_t, Integer> acc_;
};

// ---------------------------------------------------------------------------
// q-analogues

/// [n]_q = 1 + q + ... + q^{n-1}; throws std::invalid_argument for n < 0.
ParamPoly q_int(int n);
/// Gaussian binomial; 0 when k < 0, k > n or n < 0.
ParamPoly q_binomial(int n, int k);
ParamPoly q_pow(int e);
Integer binomial(int n, int k);

// ---------------------------------------------------------------------------
// Predicates, evaluation and substitution

/// True iff p lies in Z>=0[q, a, b, e1, e2, xi] (no negative coefficient, no
/// negative q power). The zero polynomial is nonnegative.
bool is_nonneg(const ParamPoly& p);

struct RationalPoint {
  Rational q, a, b, e1, e2, xi;
  const Rational& operator[](Var v) const;
};

/// Exact value at a rational point; throws std::domain_error when q = 0 and a
/// negative power of q occurs.
Rational eval_rational(const ParamPoly& p, const RationalPoint& pt);

/// Replaces v by `value`. Negative powers of v are only supported when value
/// is a signed unit monomial.
ParamPoly substitute(const ParamPoly& p, Var v, const ParamPoly& value);

/// Applies several substitutions simultaneously.
ParamPoly substitute(const ParamPoly& p,
                     std::span<const std::pair<Var, ParamPoly>> assignments);

/// Exact division; throws std::domain_error if divisor does not divide p.
ParamPoly divide_exact(const ParamPoly& p, const ParamPoly& divisor);

// ---------------------------------------------------------------------------
// Serialization

/// Canonical text: terms in descending monomial order joined by " + " / " - ",
/// factors joined by '*', variables spelled q, a, b, e1, e2, xi and written in
/// the order a, b, e1, e2, q, xi. The zero polynomial is "0".
std::string to_text(const ParamPoly& p);

/// {"terms": [{"exps": [e_q, e_a, e_b, e_e1, e_e2, e_xi], "coeff": "<decimal>"}]}
/// with terms in the same order as to_text.
nlohmann::json to_json(const ParamPoly& p);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

ParamPoly parse_param_poly(std::string_view text);
ParamPoly param_poly_from_json(const nlohmann::json& j);

}  // namespace asc
