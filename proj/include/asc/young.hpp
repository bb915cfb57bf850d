#pragma once

// Weighted sums over partitions in a rectangle: the u-weight formula for
// g_{n+k,n}, the simpler w-weight sum for the tilde family, and the lattice
// path model of the latter.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "asc/param_poly.hpp"
#include "asc/report.hpp"
#include "asc/xy_poly.hpp"

namespace asc {

/// Weakly decreasing parts with explicit length; zero parts count toward the
/// length, so (1,0) and (1) are different arguments.
using Partition = std::vector<int>;

/// All partitions of length l with parts in [0, width], in colexicographic
/// order (last part varies slowest). Yields C(l + width, l) partitions.
void for_each_partition(int l, int width, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(int l, int width);

std::string partition_text(std::span<const int> mu);

/// Z_n = X_{n/2} for even n, Y_{(n-1)/2} for odd n.
XYVar z_var(int n);

/// min(#zero parts, #parts equal to 2m+1) when the first part is 2m+1, else 0.
int s_m(int m, std::span<const int> mu);

/// prod_{i=1}^{l-s} Z_{mu_{l+1-i} + 2(i-1)} * binom(m+l, s)_q * Y_0 ... Y_{s-1}
/// with s = s_m(mu).
XYPoly weight_u(int m, std::span<const int> mu);

/// prod_{i=1}^{l} Z_{mu_{l+1-i} + 2(i-1)}.
XYPoly weight_w(std::span<const int> mu);

/// Sum of weight_w over partitions of length k and width 2n+1.
XYPoly coeff_tilde(int n, int k);

/// Sum of weight_u(n, .) over partitions of length k and width 2n+1.
XYPoly coeff_young_xy(int n, int k);
ParamPoly coeff_young(int n, int k);

/// Path sum from (-2n-1, n) to (0, n+k) on {(i,j) : -2j-1 <= i <= 0} with
/// unit right steps and up steps (i,j) -> (i,j+1) weighted Z_{i+2j+1}.
XYPoly lattice_path_oracle(int n, int k);

/// min(#parts equal to 2, #parts equal to 2n+1).
int s_bar(int n, std::span<const int> nu);

/// For nu of length k+1 and width 2n-1 with s_{n-1}(nu) = l > 0, the l+1
/// partitions ((2n+1)^j, (2n-1)^{l-j}, nu') for j = 0..l.
std::vector<Partition> block_b(int n, const Partition& nu);

/// For nu of length k-1 and width 2n+1 with last part >= 2 and
/// s_bar(n, nu) = l, the l+1 partitions (nu', 2^{l-i}, 0^i) for i = 0..l.
std::vector<Partition> block_c(int n, const Partition& nu);

/// Structural and algebraic checks behind the u-weight formula at (n, k),
/// n, k >= 1; see young_suite.cpp for the list.
Report verify_section3(int n, int k);

/// Checks that u_m and w agree after a = 0 and after b = e2, for every
/// partition with length + width <= max_total.
Report verify_weight_modification(int max_total);

}  // namespace asc
