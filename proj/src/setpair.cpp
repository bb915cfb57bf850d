#include "asc/setpair.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace asc {

namespace {

using Factor = XYMonomial::Factor;

void check_set(const IndexSet& s, int bound, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= bound || (i && s[i] <= s[i - 1]))
      throw std::invalid_argument(std::string(what) + " must be a sorted subset of {0.." + std::to_string(bound - 1) + "}");
  }
}

void check_composition(const Composition& mu, int n) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < -1 || mu[i] > n || (i && mu[i] < mu[i - 1]))
      throw std::invalid_argument("composition must be weakly increasing with parts in [-1, " + std::to_string(n) + "]");
  }
}

int y_code(int i) { return XYVar{false, i}.code(); }

// Monomial of m_mu(mu, n, B), appended to the given X factors.
XYMonomial m_monomial(const Composition& mu, int n, const IndexSet& B, std::vector<Factor> factors) {
  const int b = static_cast<int>(B.size());
  int e_q = 0;
  for (int i : B)
    if (i < n + b) factors.emplace_back(y_code(i), 1);
  for (const auto& d : displaced_elements(n, mu, B)) {
    e_q += d.element - d.target;
    factors.emplace_back(y_code(d.target), 1);
  }
  return XYMonomial(e_q, std::move(factors));
}

std::vector<Factor> x_factors(const IndexSet& A) {
  std::vector<Factor> f;
  f.reserve(A.size());
  for (int i : A) f.emplace_back(XYVar{true, i}.code(), 1);
  return f;
}

int set_sum(const IndexSet& s) { return std::accumulate(s.begin(), s.end(), 0); }

}  // namespace

void for_each_subset(int size, int k, const std::function<void(const IndexSet&)>& visit) {
  if (size < 0 || k < 0) throw std::invalid_argument("subset bounds must be nonnegative");
  if (k > size) return;
  IndexSet s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    visit(s);
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == size - k + i) --i;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void for_each_composition(int len, int lo, int hi, const std::function<void(const Composition&)>& visit) {
  if (len < 0) throw std::invalid_argument("composition length must be nonnegative");
  if (len > 0 && lo > hi) return;
  Composition c(static_cast<std::size_t>(len), lo);
  while (true) {
    visit(c);
    int i = len - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == hi) --i;
    if (i < 0) return;
    const int v = c[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < len; ++j) c[static_cast<std::size_t>(j)] = v;
  }
}

std::string set_text(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

IndexSet parse_index_set(const std::string& text) {
  IndexSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad set element '" + item + "'");
    }
    if (used != item.size() || v < 0) throw std::invalid_argument("bad set element '" + item + "'");
    if (!out.empty() && v <= out.back()) throw std::invalid_argument("set elements must be strictly increasing");
    out.push_back(v);
  }
  return out;
}

int rank_complement(const IndexSet& S, int k) {
  if (k < 0) throw std::invalid_argument("rank_complement needs k >= 0");
  if (k == 0) return -1;
  std::size_t idx = 0;
  int found = 0;
  for (int x = 0;; ++x) {
    if (idx < S.size() && S[idx] == x) {
      ++idx;
    } else if (++found == k) {
      return x;
    }
  }
}

Composition lambda_of(const IndexSet& S) {
  Composition mu(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) mu[i] = S[i] - static_cast<int>(i);
  return mu;
}

std::vector<Displaced> displaced_elements(int n, const Composition& mu, const IndexSet& B) {
  const int a = static_cast<int>(mu.size()), b = static_cast<int>(B.size());
  std::vector<Displaced> out;
  int l = 0;
  for (auto it = B.rbegin(); it != B.rend(); ++it) {
    if (*it < n + b) break;
    if (*it > n + b + a - 1) throw std::invalid_argument("set element above n+a+b-1");
    ++l;
    const int j = n + b + a - *it;
    const int target = rank_complement(B, mu[static_cast<std::size_t>(j - 1)] + l);
    if (target == -1 && *it - target < 1) throw std::logic_error("Y_{-1} with non-positive q power");
    out.push_back({j, *it, target});
  }
  return out;
}

XYPoly m_mu_xy(const Composition& mu, int n, const IndexSet& B) {
  check_composition(mu, n);
  check_set(B, n + static_cast<int>(mu.size() + B.size()), "B");
  return XYPoly::term(m_monomial(mu, n, B, {}), 1);
}

ParamPoly m_mu(const Composition& mu, int n, const IndexSet& B) { return specialize_xy(m_mu_xy(mu, n, B)); }

XYPoly M_mu_xy(const Composition& mu, int n, int b) {
  check_composition(mu, n);
  if (b < 0) throw std::invalid_argument("M_mu needs b >= 0");
  std::vector<XYPoly::Term> terms;
  for_each_subset(n + static_cast<int>(mu.size()) + b, b,
                  [&](const IndexSet& B) { terms.emplace_back(m_monomial(mu, n, B, {}), 1); });
  return XYPoly::from_terms(std::move(terms));
}

ParamPoly M_mu(const Composition& mu, int n, int b) { return specialize_xy(M_mu_xy(mu, n, b)); }

ParamPoly coeff_extract_M(const Composition& mu, int n, const IndexSet& E) {
  check_composition(mu, n);
  if (!mu.empty() && mu.front() < 0) throw std::invalid_argument("coeff_extract_M needs parts >= 0");
  const int b = static_cast<int>(E.size());
  check_set(E, n + b, "E");
  struct Group {
    int value, e, f = 0, c = 0, d = 0;
  };
  std::vector<Group> groups;
  for (int v : mu) {
    if (groups.empty() || groups.back().value != v) groups.push_back({v, 0});
    ++groups.back().e;
  }
  const Composition lam = lambda_of(E);
  int later = 0;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (lam[i] != it->value) continue;
      if (it->f++ == 0) it->c = E[i];
    }
    it->d = n + b + later - (it->c + it->f - 1);
    later += it->e;
  }
  ParamPoly total;
  std::function<void(std::size_t, const ParamPoly&)> walk = [&](std::size_t g, const ParamPoly& acc) {
    if (g == groups.size()) {
      total += acc;
      return;
    }
    const Group& gr = groups[g];
    for (int k = 0; k <= std::min(gr.e, gr.f); ++k)
      walk(g + 1, acc * q_pow(k * (gr.d + k - 1)) * q_binomial(gr.e, k) * q_binomial(gr.f, k));
  };
  walk(0, ParamPoly(1));
  return total;
}

XYPoly weight_setpair_xy(int n, const IndexSet& A, const IndexSet& B) {
  const int a = static_cast<int>(A.size()), b = static_cast<int>(B.size());
  check_set(A, n + a, "A");
  check_set(B, n + a + b, "B");
  return XYPoly::term(m_monomial(lambda_of(A), n, B, x_factors(A)), 1);
}

ParamPoly weight_setpair(int n, const IndexSet& A, const IndexSet& B) {
  return specialize_xy(weight_setpair_xy(n, A, B));
}

XYPoly coeff_setpair_xy(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("coeff_setpair needs n, k >= 0");
  std::vector<XYPoly::Term> terms;
  for (int a = 0; a <= k; ++a) {
    const int b = k - a;
    for_each_subset(n + a, a, [&](const IndexSet& A) {
      const Composition mu = lambda_of(A);
      const std::vector<Factor> xs = x_factors(A);
      for_each_subset(n + a + b, b, [&](const IndexSet& B) { terms.emplace_back(m_monomial(mu, n, B, xs), 1); });
    });
  }
  return XYPoly::from_terms(std::move(terms));
}

ParamPoly coeff_setpair(int n, int k) { return specialize_xy(coeff_setpair_xy(n, k)); }

std::pair<IndexSet, IndexSet> psi(int n, const IndexSet& S1, const IndexSet& S2) {
  const int a = static_cast<int>(S1.size()), b = static_cast<int>(S2.size());
  if (n < 0) throw std::invalid_argument("psi needs n >= 0");
  check_set(S1, n + a, "first set");
  check_set(S2, n + a + b, "second set");
  const Composition mu = lambda_of(S1);
  const auto disp = displaced_elements(n, mu, S2);
  std::vector<bool> moved(S1.size(), false);
  IndexSet first, second;
  for (int x : S2)
    if (x < n + b) first.push_back(x);
  for (const auto& d : disp) {
    const std::size_t j = static_cast<std::size_t>(d.j - 1);
    moved[j] = true;
    first.push_back(d.target);
    second.push_back(n + a + b - (d.target - (S1[j] - d.j)));
  }
  for (std::size_t m = 0; m < S1.size(); ++m)
    if (!moved[m]) second.push_back(S1[m]);
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return {first, second};
}

bool verify_simple_identity(int n, int a, int b) {
  auto side = [](int a1, int n1, int b1, int n2) {
    return q_pow(a1 * (a1 - 1) / 2) * q_binomial(n1, a1) * q_pow(b1 * (b1 - 1) / 2) * q_binomial(n2, b1);
  };
  const ParamPoly lhs = side(a, n + a, b, n + a + b);
  const ParamPoly rhs = side(a, n + a + b, b, n + b);
  if (lhs != rhs) return false;

  // Generating functions of T(n,a,b) and T(n,b,a), and psi between them.
  std::map<int, long> gen_ab, gen_ba;
  std::set<std::pair<IndexSet, IndexSet>> images;
  bool ok = true;
  for_each_subset(n + a, a, [&](const IndexSet& S1) {
    for_each_subset(n + a + b, b, [&](const IndexSet& S2) {
      const int s = set_sum(S1) + set_sum(S2);
      ++gen_ab[s];
      const auto img = psi(n, S1, S2);
      const bool in_range = static_cast<int>(img.first.size()) == b && static_cast<int>(img.second.size()) == a &&
                            (img.first.empty() || img.first.back() < n + b) &&
                            (img.second.empty() || img.second.back() < n + a + b);
      ok = ok && in_range && set_sum(img.first) + set_sum(img.second) == s;
      images.insert(img);
    });
  });
  std::size_t count_ba = 0;
  for_each_subset(n + b, b, [&](const IndexSet& S1) {
    for_each_subset(n + a + b, a, [&](const IndexSet& S2) {
      ++gen_ba[set_sum(S1) + set_sum(S2)];
      ++count_ba;
    });
  });
  if (!ok || images.size() != count_ba) return false;
  auto to_poly = [](const std::map<int, long>& gen) {
    ParamPoly p;
    for (const auto& [e, c] : gen) p += q_pow(e).scaled(Integer(c));
    return p;
  };
  return to_poly(gen_ab) == lhs && to_poly(gen_ba) == rhs;
}

ParamPoly pos2_graph_oracle(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("pos2_graph_oracle needs n, k >= 0");
  const int top = n + k;
  const int P = 2 * top + 2;
  const ParamPoly b = ParamPoly::var(Var::b);
  // Column -> path weight of arrivals in the current row; start at the far left.
  std::map<int, ParamPoly> row{{-top - 1, ParamPoly(1)}};
  for (int j = n; j < top; ++j) {
    std::vector<std::pair<int, ParamPoly>> edges;
    for (int i = 0; i <= j; ++i) edges.emplace_back(2 * i - j, x_value(i));
    for (int i = 0; i <= j; ++i) edges.emplace_back(P + 2 * i - j, q_pow(i) * b);
    std::map<int, ParamPoly> next;
    ParamPoly reach;
    auto it = row.begin();
    for (const auto& [col, w] : edges) {
      for (; it != row.end() && it->first <= col; ++it) reach += it->second;
      if (!reach.is_zero()) next[col] = reach * w;
    }
    row = std::move(next);
  }
  ParamPoly total;
  for (const auto& [col, w] : row) total += w;
  return total;
}

Section4Ranges Section4Ranges::uniform(int max) {
  Section4Ranges r;
  for (int* f : {&r.psi, &r.simple, &r.coeff, &r.lemmas, &r.sym, &r.pairs, &r.pos2, &r.rephrase}) *f = max;
  r.t_shape = std::min(r.t_shape, max);
  return r;
}

}  // namespace asc
