#include "asc/minors.hpp"

#include <map>
#include <tuple>

#include "asc/parallel.hpp"
#include "asc/recurrence.hpp"
#include "asc/young.hpp"

namespace asc {

CoeffMethod coeff_method_by_name(const std::string& name) {
  if (name == "recurrence") return CoeffMethod::recurrence;
  if (name == "young") return CoeffMethod::young;
  if (name == "setpair") return CoeffMethod::setpair;
  throw std::invalid_argument("unknown method '" + name + "' (expected recurrence, young or setpair)");
}

ParamPoly coeff(int n, int i, CoeffMethod method) {
  if (n < 0 || i < 0) throw std::invalid_argument("coefficient indices must be nonnegative");
  if (i > n) return {};
  switch (method) {
    case CoeffMethod::young:
      return coeff_young(i, n - i);
    case CoeffMethod::setpair:
      return coeff_setpair(i, n - i);
    case CoeffMethod::recurrence:
      break;
  }
  return g(n, i);
}

CoeffMatrix::CoeffMatrix(Matrix entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_)
    if (row.size() != entries_.size()) throw std::invalid_argument("coefficient matrix must be square");
}

const ParamPoly& CoeffMatrix::at(int n, int i) const {
  if (n < 0 || i < 0 || n >= size() || i >= size()) throw std::invalid_argument("matrix index out of range");
  return entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

CoeffMatrix build_G(int N, CoeffMethod method) {
  if (N < 1) throw std::invalid_argument("matrix size must be at least 1");
  Matrix m(static_cast<std::size_t>(N), std::vector<ParamPoly>(static_cast<std::size_t>(N)));
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i) m[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] = coeff(n, i, method);
  return CoeffMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Specializations

ParamPoly Specialization::apply(const ParamPoly& p) const {
  if (assignments.empty()) return p;
  return substitute(p, std::span<const std::pair<Var, ParamPoly>>(assignments));
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Var var_of(const std::string& text) {
  for (int v = 0; v < kNumVars; ++v)
    if (var_name(static_cast<Var>(v)) == text) return static_cast<Var>(v);
  throw std::invalid_argument("unknown variable '" + text + "'");
}

}  // namespace

Specialization parse_specialization(const std::string& text) {
  Specialization s;
  s.name = trim(text);
  if (s.name.empty() || s.name == "none") {
    s.name = "none";
    return s;
  }
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.name.find(',', start);
    const std::string item = s.name.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("specialization '" + item + "' lacks '='");
    const Var v = var_of(trim(item.substr(0, eq)));
    for (const auto& [w, _] : s.assignments)
      if (w == v) throw std::invalid_argument("variable assigned twice in '" + s.name + "'");
    try {
      s.assignments.emplace_back(v, parse_param_poly(item.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw std::invalid_argument("bad value in specialization '" + item + "': " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

std::vector<Specialization> standard_specializations() {
  std::vector<Specialization> out;
  for (const char* t : {"a=0", "b=0", "a=e1", "b=e2", "e1=0", "e2=0"}) out.push_back(parse_specialization(t));
  return out;
}

CoeffMatrix specialize(const CoeffMatrix& G, const Specialization& s) {
  Matrix m = G.entries();
  for (auto& row : m)
    for (auto& e : row) e = s.apply(e);
  return CoeffMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

void check_square(const Matrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
}

ParamPoly laplace(const Matrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.size()) return 1;
  ParamPoly det;
  bool negative = false;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const std::size_t c = cols[j];
    const ParamPoly& e = m[row][c];
    if (!e.is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
      const ParamPoly sub = e * laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), c);
      if (negative) det -= sub;
      else det += sub;
    }
    negative = !negative;
  }
  return det;
}

}  // namespace

ParamPoly det_cofactor(const Matrix& m) {
  check_square(m);
  std::vector<std::size_t> cols(m.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return laplace(m, cols, 0);
}

ParamPoly det_bareiss(Matrix m) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 0) return 1;
  bool negative = false;
  ParamPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negative = !negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const ParamPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        try {
          m[i][j] = divide_exact(num, prev);
        } catch (const std::domain_error&) {
          throw std::logic_error("fraction-free elimination produced an inexact division");
        }
      }
      m[i][k] = ParamPoly();
    }
    prev = m[k][k];
  }
  return negative ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

void check_indices(const CoeffMatrix& G, const IndexSet& s, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= G.size())
      throw std::invalid_argument(std::string(what) + " index " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument(std::string(what) + " must be strictly increasing");
  }
}

Matrix submatrix(const CoeffMatrix& G, const IndexSet& rows, const IndexSet& cols) {
  Matrix m;
  m.reserve(rows.size());
  for (int r : rows) {
    std::vector<ParamPoly> row;
    row.reserve(cols.size());
    for (int c : cols) row.push_back(G.at(r, c));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

ParamPoly minor(const CoeffMatrix& G, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs as many rows as columns");
  check_indices(G, rows, "row");
  check_indices(G, cols, "column");
  Matrix m = submatrix(G, rows, cols);
  return m.size() <= 3 ? det_cofactor(m) : det_bareiss(std::move(m));
}

// ---------------------------------------------------------------------------
// Sweeps

std::string minor_json_line(const MinorRecord& r) {
  nlohmann::ordered_json j;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["nonvanishing"] = r.nonvanishing;
  j["nonneg"] = r.nonneg;
  j["term_count"] = r.term_count;
  return j.dump();
}

namespace {

std::vector<IndexSet> subsets(int size, int k) {
  std::vector<IndexSet> out;
  for_each_subset(size, k, [&](const IndexSet& s) { out.push_back(s); });
  return out;
}

MinorRecord record_of(IndexSet rows, IndexSet cols, const ParamPoly& value) {
  MinorRecord r{std::move(rows), std::move(cols)};
  r.nonvanishing = !value.is_zero();
  r.nonneg = is_nonneg(value);
  r.term_count = value.size();
  return r;
}

}  // namespace

std::vector<MinorRecord> sweep_minors(const CoeffMatrix& G, int max_size, unsigned jobs) {
  if (max_size < 0) throw std::invalid_argument("minor size bound must be nonnegative");
  const int N = G.size();
  std::vector<MinorRecord> out;
  // 2 x 2 minors, indexed by (row pair, column pair), feed the 3 x 3 expansions.
  const std::vector<IndexSet> pairs = subsets(N, 2);
  std::map<IndexSet, std::size_t> pair_index;
  for (std::size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = i;
  std::vector<ParamPoly> two;
  for (int s = 1; s <= std::min(max_size, N); ++s) {
    const std::vector<IndexSet> sets = subsets(N, s);
    const std::size_t count = sets.size() * sets.size();
    auto value_at = [&](std::size_t job) -> ParamPoly {
      const IndexSet& rows = sets[job / sets.size()];
      const IndexSet& cols = sets[job % sets.size()];
      if (s != 3) return minor(G, rows, cols);
      ParamPoly det;
      for (std::size_t j = 0; j < 3; ++j) {
        const ParamPoly& e = G.at(rows[0], cols[j]);
        if (e.is_zero()) continue;
        IndexSet rest;
        for (std::size_t t = 0; t < 3; ++t)
          if (t != j) rest.push_back(cols[t]);
        const ParamPoly& sub =
            two[pair_index.at({rows[1], rows[2]}) * pairs.size() + pair_index.at(rest)];
        if (j % 2 == 0) det += e * sub;
        else det -= e * sub;
      }
      return det;
    };
    std::vector<ParamPoly> values = parallel_map(count, jobs, value_at);
    for (std::size_t job = 0; job < count; ++job)
      out.push_back(record_of(sets[job / sets.size()], sets[job % sets.size()], values[job]));
    if (s == 2) two = std::move(values);
  }
  return out;
}

Report sweep_positivity(int N, int max_size, unsigned jobs) {
  Report rep("minors");
  const CoeffMatrix G = build_G(N);
  std::vector<Specialization> specs{parse_specialization("none")};
  for (auto& s : standard_specializations()) specs.push_back(std::move(s));
  const std::string range = " (N=" + std::to_string(N) + ",size<=" + std::to_string(max_size) + ")";
  for (const auto& spec : specs) {
    Tally t;
    for (const auto& r : sweep_minors(specialize(G, spec), max_size, jobs)) {
      if (!r.nonvanishing) continue;
      t.record(r.nonneg, [&] { return "rows " + set_text(r.rows) + " cols " + set_text(r.cols); });
    }
    rep.add("minors " + spec.name + range, t.pass(), t.summary());
  }
  return rep;
}

TwoPos verify_2pos(int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0) throw std::invalid_argument("2pos needs n, a, b >= 0");
  TwoPos r;
  r.difference = g(n + a + b, n + a) * g(n + a, n) - g(n + a + b, n);
  r.nonneg = is_nonneg(r.difference);
  return r;
}

// ---------------------------------------------------------------------------
// Inequalities between generalized q-binomials

namespace {

class MCache {
 public:
  const XYPoly& get(const Composition& mu, int n, int b) {
    auto key = std::make_tuple(mu, n, b);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), M_mu_xy(mu, n, b)).first;
    return it->second;
  }

 private:
  std::map<std::tuple<Composition, int, int>, XYPoly> cache_;
};

std::vector<Composition> compositions(int len, int lo, int hi) {
  std::vector<Composition> out;
  if (hi < lo && len > 0) return out;
  for_each_composition(len, lo, hi, [&](const Composition& c) { out.push_back(c); });
  return out;
}

std::string comp_text(const Composition& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::string cap(const std::string& what, int max) { return " (" + what + "<=" + std::to_string(max) + ")"; }

struct Dominance {
  ParamPoly big;
  ParamPoly small;
};

// M^nu_{n-l2}(b) - M^mu_{n-l1}(b) for pointwise-dominated compositions.
std::vector<Dominance> check_dominance(Report& rep, MCache& M, int max, int record_max) {
  Tally t;
  std::vector<Dominance> kept;
  for (int n = 0; n <= max; ++n)
    for (int b = 0; n + b <= max; ++b)
      for (int l1 = 0; l1 <= n; ++l1)
        for (int l2 = 0; l2 <= l1; ++l2)
          for (const auto& mu : compositions(l1, -1, n - l1))
            for (const auto& nu : compositions(l2, 0, n - l2)) {
              bool below = true;
              for (int i = 0; i < l2; ++i) below = below && mu[static_cast<std::size_t>(i)] <= nu[static_cast<std::size_t>(i)];
              if (!below) continue;
              const ParamPoly big = specialize_xy(M.get(nu, n - l2, b));
              const ParamPoly small = specialize_xy(M.get(mu, n - l1, b));
              t.record(is_nonneg(big - small), [&] {
                return "mu=" + comp_text(mu) + " nu=" + comp_text(nu) + " n=" + std::to_string(n) +
                       " b=" + std::to_string(b);
              });
              if (n + b <= record_max) kept.push_back({big, small});
            }
  rep.add("dominance" + cap("n+b", max), t.pass(), t.summary());
  return kept;
}

// Y_{nu_1+b-k} ... Y_{nu_k+b-1}.
XYPoly y_run(const Composition& nu, int b, int k) {
  XYPoly y = 1;
  for (int i = 1; i <= k; ++i) y *= XYPoly::Y(nu[static_cast<std::size_t>(i - 1)] + b - k + i - 1);
  return y;
}

void check_key(Report& rep, MCache& M, int max) {
  Tally t;
  for (int n = 0; n <= max; ++n)
    for (int l = 0; n + l <= max; ++l)
      for (int b = 1; n + l + b <= max; ++b)
        for (const auto& mu : compositions(l, 0, n))
          for (int k = 1; k <= b; ++k) {
            XYPoly rhs;
            for (const auto& nu : compositions(k, 0, n + l)) {
              const XYPoly y = y_run(nu, b, k);
              if (nu[0] > n) {
                const int j = n + l + 1 - nu[0];
                const Composition tail(mu.begin() + (j - 1), mu.end());
                rhs += M.get(tail, n, b - k) * y;
              } else {
                rhs += M.get({}, nu[0], b - k) * y;
              }
            }
            t.record(is_nonneg(specialize_xy(rhs - M.get(mu, n, b))), [&] {
              return "mu=" + comp_text(mu) + " n=" + std::to_string(n) + " b=" + std::to_string(b) +
                     " k=" + std::to_string(k);
            });
          }
  rep.add("peel" + cap("n+l+b", max), t.pass(), t.summary());
}

void check_product(Report& rep, MCache& M, int max) {
  Tally t;
  for (int n = 0; n <= max; ++n)
    for (int l = 0; n + l <= max; ++l)
      for (int b = 0; n + l + b <= max; ++b)
        for (const auto& mu : compositions(l, 0, n))
          for (int k = 0; k <= b; ++k) {
            const XYPoly diff = M.get(mu, n, b - k) * M.get({}, n + l + b - k, k) - M.get(mu, n, b);
            t.record(is_nonneg(specialize_xy(diff)), [&] {
              return "mu=" + comp_text(mu) + " n=" + std::to_string(n) + " b=" + std::to_string(b) +
                     " k=" + std::to_string(k);
            });
          }
  rep.add("product_bound" + cap("n+l+b", max), t.pass(), t.summary());
}

void check_product_rule(Report& rep, const std::vector<Dominance>& pairs, int max) {
  Tally t;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!is_nonneg(pairs[i].small)) continue;
    for (std::size_t j = 0; j < pairs.size(); ++j)
      t.record(is_nonneg(pairs[i].big * pairs[j].big - pairs[i].small * pairs[j].small),
               [&] { return "pair " + std::to_string(i) + "," + std::to_string(j); });
  }
  rep.add("product_rule" + cap("n+b", max), t.pass(), t.summary());
}

}  // namespace

Report verify_M_inequalities(const MInequalityRanges& r) {
  Report rep("M_inequalities");
  MCache M;
  const auto pairs = check_dominance(rep, M, r.dominance, r.product_rule);
  check_key(rep, M, r.key);
  check_product(rep, M, r.product);
  check_product_rule(rep, pairs, r.product_rule);
  return rep;
}

}  // namespace asc
