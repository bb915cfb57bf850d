#include "asc/recurrence.hpp"
#include "asc/young.hpp"
#include "doctest.h"
#include "published_data.hpp"

using namespace asc;

namespace {

XYPoly X(int i) { return XYPoly::X(i); }
XYPoly Y(int i) { return XYPoly::Y(i); }
XYPoly qb(int n, int k) { return XYPoly::from_q(q_binomial(n, k)); }

// Independent path count: every lattice path from the corner, by recursion on
// the last step.
XYPoly paths_to(int n, int i, int j) {
  if (j == n) return i >= -2 * n - 1 ? XYPoly(1) : XYPoly();
  if (i < -2 * j - 1) return {};
  XYPoly s = paths_to(n, i - 1, j);
  if (i >= -2 * (j - 1) - 1) s += paths_to(n, i, j - 1) * XYPoly::var(z_var(i + 2 * (j - 1) + 1));
  return s;
}

}  // namespace

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0, 4) == std::vector<Partition>{{}});
  const std::vector<Partition> g31 = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 1},
                                      {2, 1}, {3, 1}, {2, 2}, {3, 2}, {3, 3}};
  CHECK(enumerate_partitions(2, 3) == g31);
  CHECK(enumerate_partitions(3, 1).size() == 4);
  for (int l = 0; l <= 6; ++l)
    for (int w = 0; w <= 6; ++w) {
      const auto all = enumerate_partitions(l, w);
      CHECK(Integer(static_cast<long>(all.size())) == binomial(l + w, l));
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(std::is_sorted(all[i].rbegin(), all[i].rend()));
        if (i) CHECK(all[i] != all[i - 1]);
      }
    }
  CHECK_THROWS_AS(enumerate_partitions(-1, 2), std::invalid_argument);
  CHECK(partition_text(Partition{3, 1, 0}) == "(3,1,0)");
}

TEST_CASE("s_m and Z") {
  CHECK(s_m(1, Partition{3, 3, 1, 0}) == 1);
  CHECK(s_m(1, Partition{3, 3, 0, 0}) == 2);
  CHECK(s_m(1, Partition{2, 2, 0, 0}) == 0);
  CHECK(s_m(0, Partition{0, 0, 0}) == 0);
  CHECK(z_var(0) == XYVar{true, 0});
  CHECK(z_var(7) == XYVar{false, 3});
  CHECK_THROWS_AS(z_var(-1), std::invalid_argument);
}

TEST_CASE("weights") {
  CHECK(weight_u(1, Partition{3, 3, 1, 0}) == X(0) * Y(1) * Y(3) * qb(5, 1) * Y(0));
  CHECK(weight_u(1, Partition{3, 3, 0, 0}) == X(0) * X(1) * qb(5, 2) * Y(0) * Y(1));
  for (int k = 0; k <= 5; ++k)
    for (int i = 0; i <= k; ++i) {
      Partition mu(static_cast<std::size_t>(k), 0);
      std::fill(mu.begin(), mu.begin() + (k - i), 1);
      XYPoly expected = qb(k, i);
      for (int j = 0; j < i; ++j) expected *= X(j);
      for (int j = 0; j < k - i; ++j) expected *= Y(j);
      CHECK(weight_u(0, mu) == expected);
    }
  CHECK(weight_w(Partition{}) == 1);
  CHECK(weight_w(Partition{0}) == X(0));
  CHECK(weight_w(Partition{1}) == Y(0));
  CHECK(weight_w(Partition{3, 3, 1, 0}) == X(0) * Y(1) * Y(3) * Y(4));
}

TEST_CASE("tilde sums") {
  for (int n = 0; n <= 3; ++n) CHECK(coeff_tilde(n, 0) == 1);
  for (int k = 0; k <= 5; ++k) {
    XYPoly expected;
    for (int i = 0; i <= k; ++i) {
      XYPoly t = 1;
      for (int j = 0; j < i; ++j) t *= X(j);
      for (int j = i; j < k; ++j) t *= Y(j);
      expected += t;
    }
    CHECK(coeff_tilde(0, k) == expected);
  }
  // (0), (1), (2), (3) in a 1 x 3 rectangle.
  CHECK(coeff_tilde(1, 1) == X(0) + Y(0) + X(1) + Y(1));
}

TEST_CASE("lattice paths") {
  CHECK(lattice_path_oracle(2, 0) == 1);
  CHECK(lattice_path_oracle(0, 1) == X(0) + Y(0));
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; n + k <= 5; ++k) {
      CHECK(lattice_path_oracle(n, k) == coeff_tilde(n, k));
      CHECK(paths_to(n, 0, n + k) == coeff_tilde(n, k));
    }
}

TEST_CASE("Young formula") {
  CHECK(coeff_young_xy(1, 2) == parse_xy_poly(published::kG31Young));
  for (int n = 0; n <= 3; ++n) CHECK(coeff_young(n, 0) == 1);
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; n + k <= 7; ++k) {
      const ParamPoly y = coeff_young(n, k);
      CHECK(y == g(n + k, n));
      CHECK(is_nonneg(y));
    }
  // The u-weight sum is not symmetric under X <-> Y before specialization.
  const XYPoly g31 = coeff_young_xy(1, 2);
  CHECK(swap_xy(g31) != g31);
  CHECK(mirror_ab(specialize_xy(g31)) == specialize_xy(g31));
}

TEST_CASE("B and C blocks") {
  const std::vector<Partition> b = {{3, 3, 1, 0, 0, 0}, {5, 3, 1, 0, 0, 0}, {5, 5, 1, 0, 0, 0}};
  CHECK(block_b(2, Partition{3, 3, 1, 0, 0, 0}) == b);
  const std::vector<Partition> c = {{5, 5, 2, 2}, {5, 5, 2, 0}, {5, 5, 0, 0}};
  CHECK(block_c(2, Partition{5, 5, 2, 2}) == c);
  CHECK(block_c(2, Partition{4, 3}) == std::vector<Partition>{{4, 3}});
  CHECK(block_c(1, Partition{}) == std::vector<Partition>{{}});
  CHECK(s_bar(2, Partition{5, 2, 2}) == 1);
  CHECK_THROWS_AS(block_b(2, Partition{2, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(block_c(2, Partition{5, 1}), std::invalid_argument);
}

TEST_CASE("identity suite") {
  for (auto [n, k] : {std::pair{1, 1}, {2, 2}, {1, 3}, {3, 1}}) {
    const Report r = verify_section3(n, k);
    INFO(r.to_text());
    CHECK(r.all_pass());
    CHECK(r.checks().size() >= 15);
  }
  CHECK_THROWS_AS(verify_section3(0, 2), std::invalid_argument);
  const Report mod = verify_weight_modification(5);
  INFO(mod.to_text());
  CHECK(mod.all_pass());
}
