#include "asc/xy_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "text_parser.hpp"

namespace asc {

std::string XYVar::name() const {
  if (!is_x && index == -1) return "Ym1";
  return (is_x ? "X" : "Y") + std::to_string(index);
}

// ---------------------------------------------------------------------------
// XYMonomial

XYMonomial::XYMonomial(int e_q, std::vector<Factor> factors) : e_q_(e_q) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [code, e] : factors) {
    if (code < 0) throw std::invalid_argument("XY variable index below -1");
    if (e < 0) throw std::invalid_argument("negative XY exponent");
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == code) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(code, e);
    }
    degree_ += e;
  }
}

int XYMonomial::exp(XYVar v) const {
  const int code = v.code();
  for (const auto& [c, e] : factors_)
    if (c == code) return e;
  return 0;
}

std::vector<std::pair<int, int>> XYMonomial::x_exps() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [c, e] : factors_) {
    const XYVar v = XYVar::from_code(c);
    if (v.is_x) out.emplace_back(v.index, e);
  }
  return out;
}

std::vector<std::pair<int, int>> XYMonomial::y_exps() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [c, e] : factors_) {
    const XYVar v = XYVar::from_code(c);
    if (!v.is_x) out.emplace_back(v.index, e);
  }
  return out;
}

XYMonomial operator*(const XYMonomial& x, const XYMonomial& y) {
  XYMonomial r;
  r.e_q_ = x.e_q_ + y.e_q_;
  r.degree_ = x.degree_ + y.degree_;
  r.factors_.reserve(x.factors_.size() + y.factors_.size());
  auto i = x.factors_.begin(), j = y.factors_.begin();
  while (i != x.factors_.end() || j != y.factors_.end()) {
    if (j == y.factors_.end() || (i != x.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == x.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::strong_ordering operator<=>(const XYMonomial& x, const XYMonomial& y) {
  if (auto c = x.degree_ <=> y.degree_; c != 0) return c;
  if (auto c = x.e_q_ <=> y.e_q_; c != 0) return c;
  return x.factors_ <=> y.factors_;
}

// ---------------------------------------------------------------------------
// XYPoly

XYPoly::XYPoly(long c) {
  if (c != 0) terms_.emplace_back(XYMonomial(), Integer(c));
}

XYPoly::XYPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(XYMonomial(), c);
}

XYPoly XYPoly::var(XYVar v, int e) {
  if (v.index < (v.is_x ? 0 : -1)) throw std::invalid_argument("XY variable index out of range");
  return term(XYMonomial(0, {{v.code(), e}}), 1);
}

XYPoly XYPoly::X(int i) { return var(XYVar{true, i}); }
XYPoly XYPoly::Y(int i) { return var(XYVar{false, i}); }
XYPoly XYPoly::q_pow(int e) { return term(XYMonomial(e, {}), 1); }

XYPoly XYPoly::term(XYMonomial m, Integer c) {
  XYPoly p;
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

XYPoly XYPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return l.first < r.first; });
  XYPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

XYPoly XYPoly::from_q(const ParamPoly& p) {
  std::vector<Term> terms;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != m.exp(Var::q)) throw std::invalid_argument("from_q: polynomial involves more than q");
    terms.emplace_back(XYMonomial(m.exp(Var::q), {}), c);
  }
  return from_terms(std::move(terms));
}

Integer XYPoly::coeff(const XYMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const XYMonomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

bool XYPoly::has_y_minus1() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.has_y_minus1(); });
}

namespace {

std::vector<XYPoly::Term> merge(const std::vector<XYPoly::Term>& x, const std::vector<XYPoly::Term>& y,
                                bool negate_y) {
  std::vector<XYPoly::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, negate_y ? Integer(-y[j].second) : y[j].second);
      ++j;
    } else {
      Integer c = negate_y ? Integer(x[i].second - y[j].second) : Integer(x[i].second + y[j].second);
      if (c != 0) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

XYPoly& XYPoly::operator+=(const XYPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

XYPoly& XYPoly::operator-=(const XYPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

XYPoly& XYPoly::operator*=(const XYPoly& o) {
  *this = *this * o;
  return *this;
}

XYPoly operator+(const XYPoly& x, const XYPoly& y) {
  XYPoly r;
  r.terms_ = merge(x.terms_, y.terms_, false);
  return r;
}

XYPoly operator-(const XYPoly& x, const XYPoly& y) {
  XYPoly r;
  r.terms_ = merge(x.terms_, y.terms_, true);
  return r;
}

XYPoly operator-(const XYPoly& x) {
  XYPoly r = x;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

XYPoly operator*(const XYPoly& x, const XYPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<XYPoly::Term> terms;
  terms.reserve(x.size() * y.size());
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) terms.emplace_back(mx * my, cx * cy);
  return XYPoly::from_terms(std::move(terms));
}

XYPoly XYPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  XYPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

XYPoly XYPoly::shifted(const XYMonomial& m) const {
  XYPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mon, c] : terms_) r.terms_.emplace_back(mon * m, c);
  return r;
}

XYPoly sum(std::vector<XYPoly> parts) {
  std::vector<XYPoly::Term> all;
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  all.reserve(n);
  for (auto& p : parts)
    for (const auto& t : p.terms()) all.push_back(t);
  return XYPoly::from_terms(std::move(all));
}

XYPoly swap_xy(const XYPoly& p) {
  std::vector<XYPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    if (m.has_y_minus1()) throw std::invalid_argument("swap_xy: Y_{-1} has no X counterpart");
    std::vector<XYMonomial::Factor> f;
    for (const auto& [code, e] : m.factors()) f.emplace_back(code % 2 == 1 ? code + 1 : code - 1, e);
    terms.emplace_back(XYMonomial(m.e_q(), std::move(f)), c);
  }
  return XYPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Specialization

ParamPoly x_value(int i) {
  if (i < 0) throw std::invalid_argument("X index must be nonnegative");
  return ParamPoly::var(Var::a) * q_pow(i) + ParamPoly::var(Var::e1) * q_int(i);
}

ParamPoly y_value(int i) {
  if (i < -1) throw std::invalid_argument("Y index must be at least -1");
  if (i == -1) return q_pow(-1) * (ParamPoly::var(Var::b) - ParamPoly::var(Var::e2));
  return ParamPoly::var(Var::b) * q_pow(i) + ParamPoly::var(Var::e2) * q_int(i);
}

ParamPoly specialize_xy(const XYPoly& p, const std::function<ParamPoly(XYVar)>& value) {
  // Expand each monomial into its factor sequence and visit sequences in
  // lexicographic order, so shared prefixes are multiplied out only once.
  std::map<std::vector<int>, std::vector<ParamPoly::Term>> grouped;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(m.xy_degree()));
    for (const auto& [code, e] : m.factors()) seq.insert(seq.end(), static_cast<std::size_t>(e), code);
    grouped[std::move(seq)].emplace_back(Monomial::of(Var::q, m.e_q()), c);
  }
  std::map<int, ParamPoly> values;
  auto value_of = [&](int code) -> const ParamPoly& {
    auto it = values.find(code);
    if (it == values.end()) it = values.emplace(code, value(XYVar::from_code(code))).first;
    return it->second;
  };
  ParamPolyAccumulator acc;
  std::vector<ParamPoly> prefix{ParamPoly(1)};
  const std::vector<int>* prev = nullptr;
  for (auto& [seq, qterms] : grouped) {
    std::size_t common = 0;
    if (prev != nullptr)
      while (common < prev->size() && common < seq.size() && (*prev)[common] == seq[common]) ++common;
    prefix.resize(common + 1);
    for (std::size_t d = common; d < seq.size(); ++d) prefix.push_back(prefix.back() * value_of(seq[d]));
    acc.add(prefix.back() * ParamPoly::from_terms(std::move(qterms)));
    prev = &seq;
  }
  return acc.take();
}

ParamPoly specialize_xy(const XYPoly& p) {
  static std::mutex mu;
  static std::map<int, ParamPoly> cache;
  auto value = [](XYVar v) {
    const int code = v.code();
    {
      std::lock_guard lock(mu);
      if (auto it = cache.find(code); it != cache.end()) return it->second;
    }
    ParamPoly val = v.is_x ? x_value(v.index) : y_value(v.index);
    std::lock_guard lock(mu);
    cache.emplace(code, val);
    return val;
  };
  return specialize_xy(p, value);
}

ParamPoly mirror_ab(const ParamPoly& p) {
  std::vector<ParamPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial::Exponents e = m.exponents();
    std::swap(e[static_cast<int>(Var::a)], e[static_cast<int>(Var::b)]);
    std::swap(e[static_cast<int>(Var::e1)], e[static_cast<int>(Var::e2)]);
    terms.emplace_back(Monomial(e), c);
  }
  return ParamPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string monomial_text(const XYMonomial& m) {
  std::vector<std::string> parts;
  if (m.e_q() != 0) parts.push_back(m.e_q() == 1 ? "q" : "q^" + std::to_string(m.e_q()));
  auto emit = [&](bool is_x, const std::vector<std::pair<int, int>>& exps) {
    for (const auto& [i, e] : exps) {
      std::string s = XYVar{is_x, i}.name();
      if (e != 1) s += '^' + std::to_string(e);
      parts.push_back(std::move(s));
    }
  };
  emit(true, m.x_exps());
  emit(false, m.y_exps());
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += '*';
    out += s;
  }
  return out;
}

}  // namespace

std::string to_text(const XYPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const Integer mag = abs(c);
    const std::string mon = monomial_text(m);
    if (mon.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += mon;
    }
  }
  return out;
}

nlohmann::json to_json(const XYPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json x = nlohmann::json::array(), y = nlohmann::json::array();
    for (const auto& [i, e] : it->first.x_exps()) x.push_back({i, e});
    for (const auto& [i, e] : it->first.y_exps()) y.push_back({i, e});
    terms.push_back({{"q", it->first.e_q()}, {"x", x}, {"y", y}, {"coeff", it->second.get_str()}});
  }
  return {{"terms", terms}};
}

XYPoly parse_xy_poly(std::string_view text) {
  auto resolve = [](std::string_view name, int e, std::size_t pos) -> XYPoly {
    if (name == "q") return XYPoly::q_pow(e);
    if (e < 0) throw ParseError("negative exponent on " + std::string(name), pos);
    if (name == "Ym1") return XYPoly::var(XYVar{false, -1}, e);
    if (name.size() >= 2 && (name[0] == 'X' || name[0] == 'Y')) {
      int index = 0;
      for (char ch : name.substr(1)) {
        if (ch < '0' || ch > '9' || index > 100000) throw ParseError("bad variable '" + std::string(name) + "'", pos);
        index = index * 10 + (ch - '0');
      }
      return XYPoly::var(XYVar{name[0] == 'X', index}, e);
    }
    throw ParseError("unknown variable '" + std::string(name) + "'", pos);
  };
  return detail::TextParser<XYPoly>(text, resolve).parse();
}

XYPoly xy_poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("expected {\"terms\": [...]}");
  std::vector<XYPoly::Term> terms;
  for (const auto& t : j["terms"]) {
    std::vector<XYMonomial::Factor> f;
    for (const auto& xe : t.at("x")) f.emplace_back(XYVar{true, xe.at(0).get<int>()}.code(), xe.at(1).get<int>());
    for (const auto& ye : t.at("y")) {
      const int i = ye.at(0).get<int>();
      if (i < -1) throw std::invalid_argument("Y index below -1");
      f.emplace_back(XYVar{false, i}.code(), ye.at(1).get<int>());
    }
    terms.emplace_back(XYMonomial(t.at("q").get<int>(), std::move(f)), Integer(t.at("coeff").get<std::string>()));
  }
  return XYPoly::from_terms(std::move(terms));
}

}  // namespace asc
