#include "oracles.hpp"

#include <map>

namespace oracle {

QSeries multiply(const QSeries& x, const QSeries& y) {
  if (x.empty() || y.empty()) return {};
  QSeries out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

QSeries shift(const QSeries& x, int e) {
  QSeries out(static_cast<std::size_t>(e), 0);
  out.insert(out.end(), x.begin(), x.end());
  return out;
}

QSeries qbinomial(int n, int k) {
  static std::map<std::pair<int, int>, QSeries> memo;
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {1};
  const auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const QSeries left = qbinomial(n - 1, k - 1);
  const QSeries right = shift(qbinomial(n - 1, k), k);
  QSeries out(std::max(left.size(), right.size()), 0);
  for (std::size_t i = 0; i < left.size(); ++i) out[i] += left[i];
  for (std::size_t i = 0; i < right.size(); ++i) out[i] += right[i];
  memo[key] = out;
  return out;
}

QSeries subset_sums(int size, int k) {
  // ways[c][s]: subsets of the elements seen so far with c elements and sum s.
  const int max_sum = size * (size - 1) / 2;
  std::vector<QSeries> ways(static_cast<std::size_t>(k) + 1, QSeries(static_cast<std::size_t>(max_sum) + 1, 0));
  ways[0][0] = 1;
  for (int e = 0; e < size; ++e)
    for (int c = k; c >= 1; --c)
      for (int s = max_sum; s >= e; --s)
        ways[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] +=
            ways[static_cast<std::size_t>(c) - 1][static_cast<std::size_t>(s - e)];
  QSeries out = ways[static_cast<std::size_t>(k)];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

asc::ParamPoly to_param(const QSeries& s) {
  asc::ParamPoly p;
  for (std::size_t e = 0; e < s.size(); ++e)
    if (s[e] != 0) p += asc::ParamPoly::var(asc::Var::q, static_cast<int>(e)).scaled(s[e]);
  return p;
}

asc::ParamPoly q1_product(int n, int k) {
  if (k < 0 || k > n) return {};
  asc::Integer choose = 1;
  for (int i = 0; i < k; ++i) choose = choose * (n - i) / (i + 1);
  const asc::ParamPoly a = asc::ParamPoly::var(asc::Var::a), b = asc::ParamPoly::var(asc::Var::b);
  asc::ParamPoly p = choose;
  for (int i = n - k; i <= n - 1; ++i) p = p * (a + b + a * b * asc::ParamPoly(i));
  return p;
}

bool json_nonneg(const asc::ParamPoly& p) {
  for (const auto& t : asc::to_json(p)["terms"]) {
    if (t["coeff"].get<std::string>().front() == '-') return false;
    if (t["exps"][0].get<int>() < 0) return false;
  }
  return true;
}

}  // namespace oracle
