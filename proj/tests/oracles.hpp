#pragma once

// Reference computations for the acceptance run, written without the
// library's q-analogue and subset code.

#include <string>
#include <vector>

#include "asc/param_poly.hpp"

namespace oracle {

/// Dense polynomial in q: coefficient of q^e at index e.
using QSeries = std::vector<asc::Integer>;

QSeries multiply(const QSeries& x, const QSeries& y);
QSeries shift(const QSeries& x, int e);
/// Gaussian binomial by the Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
QSeries qbinomial(int n, int k);
/// Counts k-subsets of {0..size-1} by element sum.
QSeries subset_sums(int size, int k);
asc::ParamPoly to_param(const QSeries& s);

/// C(n,k) prod_{i=n-k}^{n-1} (a + b + i a b), expanded by repeated products.
asc::ParamPoly q1_product(int n, int k);

/// Nonnegativity read off the JSON serialization.
bool json_nonneg(const asc::ParamPoly& p);

}  // namespace oracle
