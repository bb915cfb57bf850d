#pragma once

// Published expansions, transcribed into the library's text syntax.

#include <array>
#include <string_view>

namespace asc::published {

// Coefficients [x^0], [x^1], ... of p'_0 .. p'_3 (e1 = e2 = a*b).
inline constexpr std::array<std::string_view, 1> kPrime0 = {"1"};
inline constexpr std::array<std::string_view, 2> kPrime1 = {"a + b", "1"};
inline constexpr std::array<std::string_view, 3> kPrime2 = {
    "a^2*q + b^2*q + a*b + a*b*q + a*b^2 + a^2*b",
    "a + b + a*q + b*q + 2*a*b",
    "1",
};
inline constexpr std::array<std::string_view, 4> kPrime3 = {
    "2*a^2*b^2 + a^3*b^2 + a^2*b^3 + a^2*b*q + a^3*b*q + a*b^2*q + 2*a^2*b^2*q + a^3*b^2*q + a*b^3*q"
    " + a^2*b^3*q + a^2*b*q^2 + 2*a^3*b*q^2 + a*b^2*q^2 + 2*a^2*b^2*q^2 + 2*a*b^3*q^2 + a^3*q^3"
    " + a^2*b*q^3 + a*b^2*q^3 + b^3*q^3",
    "a*b + 3*a^2*b + 3*a*b^2 + 3*a^2*b^2 + a^2*q + 2*a*b*q + 3*a^2*b*q + b^2*q + 3*a*b^2*q"
    " + 3*a^2*b^2*q + a^2*q^2 + 2*a*b*q^2 + 3*a^2*b*q^2 + b^2*q^2 + 3*a*b^2*q^2 + a^2*q^3 + a*b*q^3"
    " + b^2*q^3",
    "a + b + a*q + b*q + a*q^2 + b*q^2 + 4*a*b + 2*a*b*q",
    "1",
};

// g_{3,1} from the Young-diagram formula.
inline constexpr std::string_view kG31Young =
    "X0*X1 + X0*X2 + X1*X2 + X0*Y1 + Y0*X2 + X1*Y2 + (1 + q + q^2)*X0*Y0 + Y0*Y1 + Y0*Y2 + Y1*Y2";

// g_{3,1} from the set-pair formula.
inline constexpr std::string_view kG31SetPair =
    "X0*X1 + X0*X2 + X1*X2 + X0*Y0 + X0*Y1 + q^2*X0*Y0 + X1*Y0 + X1*Y1 + q*X1*Y1 + Y0*Y1 + Y0*Y2"
    " + Y1*Y2";

// Displayed as g_{4,2} g_{2,1} - g_{4,1} with 1-based labels; equals g(3,1) g(1,0) - g(3,0) here. 36 monomials.
inline constexpr std::string_view kTwoPosExample =
    "a^2*b + a*b^2 + 2*a^2*e1 + 2*a*b*e1 + b^2*e1 + b*e1^2 + a^2*e2 + 2*a*b*e2 + 2*b^2*e2 + a*e1*e2"
    " + b*e1*e2 + a*e2^2 + a^3*q + 2*a^2*b*q + 2*a*b^2*q + b^3*q + a^2*e1*q + 2*a*b*e1*q + b^2*e1*q"
    " + b*e1^2*q + a^2*e2*q + 2*a*b*e2*q + b^2*e2*q + a*e1*e2*q + b*e1*e2*q + a*e2^2*q + a^3*q^2"
    " + 2*a^2*b*q^2 + 2*a*b^2*q^2 + b^3*q^2 + 2*a*b*e1*q^2 + b^2*e1*q^2 + a^2*e2*q^2 + 2*a*b*e2*q^2"
    " + a^2*b*q^3 + a*b^2*q^3";
inline constexpr int kTwoPosExampleTerms = 36;

// [Y0*Y1] of the generalized q-binomial with mu = (0,0), n = 2, b = 2.
inline constexpr std::string_view kMCoefficientExample = "1 + q^3 + 2*q^4 + q^5 + q^8";

}  // namespace asc::published
