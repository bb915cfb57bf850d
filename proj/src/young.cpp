#include "asc/young.hpp"

#include <stdexcept>

namespace asc {

namespace {

void fill_from_end(Partition& mu, int pos, int lower, int width, const std::function<void(const Partition&)>& visit) {
  if (pos < 0) {
    visit(mu);
    return;
  }
  for (int v = lower; v <= width; ++v) {
    mu[static_cast<std::size_t>(pos)] = v;
    fill_from_end(mu, pos - 1, v, width, visit);
  }
}

// Appends the Z factors of prod_{i=1}^{count} Z_{mu_{l+1-i} + 2(i-1)}.
void append_z_factors(std::span<const int> mu, int count, std::vector<XYMonomial::Factor>& out) {
  const int l = static_cast<int>(mu.size());
  for (int i = 1; i <= count; ++i) out.emplace_back(z_var(mu[static_cast<std::size_t>(l - i)] + 2 * (i - 1)).code(), 1);
}

}  // namespace

void for_each_partition(int l, int width, const std::function<void(const Partition&)>& visit) {
  if (l < 0 || width < 0) throw std::invalid_argument("partition bounds must be nonnegative");
  Partition mu(static_cast<std::size_t>(l), 0);
  fill_from_end(mu, l - 1, 0, width, visit);
}

std::vector<Partition> enumerate_partitions(int l, int width) {
  std::vector<Partition> out;
  for_each_partition(l, width, [&](const Partition& mu) { out.push_back(mu); });
  return out;
}

std::string partition_text(std::span<const int> mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(mu[i]);
  }
  return s + ")";
}

XYVar z_var(int n) {
  if (n < 0) throw std::invalid_argument("Z index must be nonnegative");
  return XYVar{n % 2 == 0, n / 2};
}

int s_m(int m, std::span<const int> mu) {
  if (mu.empty() || mu[0] != 2 * m + 1) return 0;
  int zeros = 0, tops = 0;
  for (int p : mu) {
    zeros += p == 0;
    tops += p == 2 * m + 1;
  }
  return std::min(zeros, tops);
}

XYPoly weight_u(int m, std::span<const int> mu) {
  const int l = static_cast<int>(mu.size());
  const int s = s_m(m, mu);
  std::vector<XYMonomial::Factor> f;
  append_z_factors(mu, l - s, f);
  for (int i = 0; i < s; ++i) f.emplace_back(XYVar{false, i}.code(), 1);
  const XYMonomial base(0, std::move(f));
  std::vector<XYPoly::Term> terms;
  const ParamPoly binom = q_binomial(m + l, s);
  for (const auto& [qm, c] : binom.terms()) terms.emplace_back(base * XYMonomial(qm.exp(Var::q), {}), c);
  return XYPoly::from_terms(std::move(terms));
}

XYPoly weight_w(std::span<const int> mu) {
  std::vector<XYMonomial::Factor> f;
  append_z_factors(mu, static_cast<int>(mu.size()), f);
  return XYPoly::term(XYMonomial(0, std::move(f)), 1);
}

XYPoly coeff_tilde(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("coeff_tilde needs n, k >= 0");
  std::vector<XYPoly::Term> terms;
  for_each_partition(k, 2 * n + 1, [&](const Partition& mu) {
    const XYPoly w = weight_w(mu);
    terms.insert(terms.end(), w.terms().begin(), w.terms().end());
  });
  return XYPoly::from_terms(std::move(terms));
}

XYPoly coeff_young_xy(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("coeff_young needs n, k >= 0");
  std::vector<XYPoly::Term> terms;
  for_each_partition(k, 2 * n + 1, [&](const Partition& mu) {
    const XYPoly u = weight_u(n, mu);
    terms.insert(terms.end(), u.terms().begin(), u.terms().end());
  });
  return XYPoly::from_terms(std::move(terms));
}

ParamPoly coeff_young(int n, int k) { return specialize_xy(coeff_young_xy(n, k)); }

XYPoly lattice_path_oracle(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("lattice_path_oracle needs n, k >= 0");
  // row[i + 2j + 1] holds the path sum into vertex (i, j).
  std::vector<XYPoly> row(static_cast<std::size_t>(2 * n + 2));
  row[0] = 1;
  for (std::size_t c = 1; c < row.size(); ++c) row[c] = row[c - 1];
  for (int j = n + 1; j <= n + k; ++j) {
    std::vector<XYPoly> next(static_cast<std::size_t>(2 * j + 2));
    for (int i = -2 * j - 1; i <= 0; ++i) {
      const std::size_t c = static_cast<std::size_t>(i + 2 * j + 1);
      XYPoly value;
      if (c > 0) value = next[c - 1];
      if (i >= -2 * (j - 1) - 1) {
        const XYPoly& below = row[static_cast<std::size_t>(i + 2 * (j - 1) + 1)];
        value += below * XYPoly::var(z_var(i + 2 * (j - 1) + 1));
      }
      next[c] = std::move(value);
    }
    row = std::move(next);
  }
  return row.back();
}

}  // namespace asc
