#pragma once

// Polynomials in X_0, X_1, ... and Y_{-1}, Y_0, Y_1, ... over Z[q, q^-1].
//
// X_i and Y_i stand for a*q^i + e1*[i]_q and b*q^i + e2*[i]_q. Y_{-1} is the
// formal symbol q^-1 (b - e2); it stays symbolic until specialize_xy.

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asc/param_poly.hpp"

namespace asc {

/// Variable codes: Y_{-1} -> 0, X_i -> 2i+1, Y_i -> 2i+2.
struct XYVar {
  bool is_x;
  int index;

  int code() const { return is_x ? 2 * index + 1 : 2 * index + 2; }
  static XYVar from_code(int code) {
    return code % 2 == 1 ? XYVar{true, (code - 1) / 2} : XYVar{false, (code - 2) / 2};
  }
  std::string name() const;
  friend bool operator==(XYVar, XYVar) = default;
};

class XYMonomial {
 public:
  using Factor = std::pair<int, int>;  // (variable code, positive exponent)

  XYMonomial() = default;
  XYMonomial(int e_q, std::vector<Factor> factors);

  int e_q() const { return e_q_; }
  /// Factors sorted by variable code.
  const std::vector<Factor>& factors() const { return factors_; }
  int xy_degree() const { return degree_; }
  int exp(XYVar v) const;
  bool has_y_minus1() const { return !factors_.empty() && factors_.front().first == 0; }

  /// (index, exponent) lists for X and for Y, sorted by index.
  std::vector<std::pair<int, int>> x_exps() const;
  std::vector<std::pair<int, int>> y_exps() const;

  friend XYMonomial operator*(const XYMonomial& x, const XYMonomial& y);

  /// Graded order: XY degree, then q exponent, then the factor list.
  friend std::strong_ordering operator<=>(const XYMonomial& x, const XYMonomial& y);
  friend bool operator==(const XYMonomial& x, const XYMonomial& y) = default;

 private:
  int e_q_ = 0;
  int degree_ = 0;
  std::vector<Factor> factors_;
};

class XYPoly {
 public:
  using Term = std::pair<XYMonomial, Integer>;

  XYPoly() = default;
  XYPoly(long c);           // NOLINT(google-explicit-constructor)
  XYPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static XYPoly X(int i);
  static XYPoly Y(int i);  ///< i >= -1
  static XYPoly var(XYVar v, int e = 1);
  static XYPoly q_pow(int e);
  static XYPoly term(XYMonomial m, Integer c);
  static XYPoly from_terms(std::vector<Term> terms);
  /// Lifts a polynomial in q alone; throws std::invalid_argument otherwise.
  static XYPoly from_q(const ParamPoly& p);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(const XYMonomial& m) const;
  bool has_y_minus1() const;

  XYPoly& operator+=(const XYPoly& o);
  XYPoly& operator-=(const XYPoly& o);
  XYPoly& operator*=(const XYPoly& o);
  friend XYPoly operator+(const XYPoly& x, const XYPoly& y);
  friend XYPoly operator-(const XYPoly& x, const XYPoly& y);
  friend XYPoly operator-(const XYPoly& x);
  friend XYPoly operator*(const XYPoly& x, const XYPoly& y);
  friend bool operator==(const XYPoly& x, const XYPoly& y) = default;

  XYPoly scaled(const Integer& c) const;
  /// Multiplies every term by q^e times the given monomial.
  XYPoly shifted(const XYMonomial& m) const;

 private:
  std::vector<Term> terms_;
};

/// Sums a batch of polynomials with one sort-and-merge.
XYPoly sum(std::vector<XYPoly> parts);

/// Exchanges X_i and Y_i; throws std::invalid_argument when Y_{-1} occurs.
XYPoly swap_xy(const XYPoly& p);

/// X_i = a q^i + e1 [i]_q.
ParamPoly x_value(int i);
/// Y_i = b q^i + e2 [i]_q, and Y_{-1} = q^-1 (b - e2).
ParamPoly y_value(int i);

/// The specialization X_i -> x_value(i), Y_i -> y_value(i).
ParamPoly specialize_xy(const XYPoly& p);

/// Specialization with caller-supplied values for each variable.
ParamPoly specialize_xy(const XYPoly& p, const std::function<ParamPoly(XYVar)>& value);

/// Mirror a <-> b, e1 <-> e2 on a ParamPoly.
ParamPoly mirror_ab(const ParamPoly& p);

/// Text: terms in descending order, factors q^k, X0, X1, ..., Ym1, Y0, ...
std::string to_text(const XYPoly& p);
/// {"terms": [{"q": e, "x": [[i, e], ...], "y": [[i, e], ...], "coeff": "<decimal>"}]}
nlohmann::json to_json(const XYPoly& p);
XYPoly parse_xy_poly(std::string_view text);
XYPoly xy_poly_from_json(const nlohmann::json& j);

}  // namespace asc
