#include "asc/param_poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "text_parser.hpp"

namespace asc {

namespace {

constexpr int kDegShift = 52;
constexpr int kQShift = 40;
constexpr std::uint64_t kSignedMask = (1u << Monomial::kSignedBits) - 1;
constexpr std::uint64_t kUnsignedMask = Monomial::kMaxUnsigned;

constexpr int unsigned_shift(Var v) { return 32 - 8 * (static_cast<int>(v) - 1); }

// Field 0 is the total degree, fields 1..6 are the variables.
constexpr int kFields = kNumVars + 1;
using FieldRanges = std::array<std::pair<int, int>, kFields>;

int field_value(std::uint64_t key, int field) {
  if (field == 0) return static_cast<int>((key >> kDegShift) & kSignedMask) - Monomial::kSignedBias;
  if (field == 1) return static_cast<int>((key >> kQShift) & kSignedMask) - Monomial::kSignedBias;
  return static_cast<int>((key >> unsigned_shift(static_cast<Var>(field - 1))) & kUnsignedMask);
}

bool field_fits(int field, int value) {
  if (field <= 1) return value >= -Monomial::kSignedBias && value < Monomial::kSignedBias;
  return value >= 0 && value <= Monomial::kMaxUnsigned;
}

FieldRanges field_ranges(const std::vector<ParamPoly::Term>& terms) {
  FieldRanges r;
  r.fill({std::numeric_limits<int>::max(), std::numeric_limits<int>::min()});
  for (const auto& [m, c] : terms) {
    for (int f = 0; f < kFields; ++f) {
      const int v = field_value(m.key(), f);
      r[f].first = std::min(r[f].first, v);
      r[f].second = std::max(r[f].second, v);
    }
  }
  return r;
}

void check_product_fits(const std::vector<ParamPoly::Term>& x,
                        const std::vector<ParamPoly::Term>& y) {
  const FieldRanges rx = field_ranges(x);
  const FieldRanges ry = field_ranges(y);
  for (int f = 0; f < kFields; ++f) {
    if (!field_fits(f, rx[f].first + ry[f].first) || !field_fits(f, rx[f].second + ry[f].second))
      throw std::overflow_error("monomial exponent overflow in product");
  }
}

// Raw key product; valid only after check_product_fits.
inline std::uint64_t key_mul(std::uint64_t x, std::uint64_t y) { return x + y - Monomial::kOneKey; }

// Open-addressing accumulator keyed by packed monomials with 128-bit sums.
class SmallAccumulator {
 public:
  explicit SmallAccumulator(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, Slot{kEmpty, 0});
  }

  void add(std::uint64_t key, __int128 v) {
    if (2 * (used_ + 1) > slots_.size()) grow();
    Slot& s = find(key);
    if (s.key == kEmpty) {
      s.key = key;
      ++used_;
    }
    s.value += v;
  }

  std::vector<ParamPoly::Term> take() {
    std::vector<ParamPoly::Term> out;
    out.reserve(used_);
    for (const Slot& s : slots_) {
      if (s.key == kEmpty || s.value == 0) continue;
      out.emplace_back(Monomial::from_key(s.key), to_integer(s.value));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  }

  static Integer to_integer(__int128 v) {
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
      return Integer(static_cast<long>(v));
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64));
    Integer lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  struct Slot {
    std::uint64_t key;
    __int128 value;
  };

  static std::size_t hash(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }

  Slot& find(std::uint64_t key) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = hash(key) & mask;
    while (slots_[i].key != kEmpty && slots_[i].key != key) i = (i + 1) & mask;
    return slots_[i];
  }

  void grow() {
    std::vector<Slot> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, Slot{kEmpty, 0});
    for (const Slot& s : old)
      if (s.key != kEmpty) find(s.key) = s;
  }

  std::vector<Slot> slots_;
  std::size_t used_ = 0;
};

std::size_t max_bits(const std::vector<ParamPoly::Term>& terms) {
  std::size_t b = 0;
  for (const auto& t : terms) b = std::max(b, mpz_sizeinbase(t.second.get_mpz_t(), 2));
  return b;
}

std::size_t bit_length(std::size_t n) {
  std::size_t b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

std::vector<ParamPoly::Term> mul_terms(const std::vector<ParamPoly::Term>& x,
                                       const std::vector<ParamPoly::Term>& y) {
  check_product_fits(x, y);
  const std::size_t bx = max_bits(x);
  const std::size_t by = max_bits(y);
  if (bx <= 62 && by <= 62 && bx + by + bit_length(std::min(x.size(), y.size())) <= 125) {
    std::vector<long> cy(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) cy[j] = y[j].second.get_si();
    SmallAccumulator acc(std::max(x.size(), y.size()) * 4);
    for (const auto& [mx, c] : x) {
      const __int128 cx = c.get_si();
      const std::uint64_t kx = mx.key();
      for (std::size_t j = 0; j < y.size(); ++j) acc.add(key_mul(kx, y[j].first.key()), cx * cy[j]);
    }
    return acc.take();
  }
  std::map<std::uint64_t, Integer> acc;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      Integer& slot = acc[key_mul(mx.key(), my.key())];
      mpz_addmul(slot.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    }
  }
  std::vector<ParamPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) out.emplace_back(Monomial::from_key(k), std::move(c));
  return out;
}

template <class Combine>
std::vector<ParamPoly::Term> merge_terms(const std::vector<ParamPoly::Term>& x,
                                         const std::vector<ParamPoly::Term>& y, bool negate_y,
                                         Combine) {
  std::vector<ParamPoly::Term> out;
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

struct NoOp {};

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

std::string_view var_name(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::a: return "a";
    case Var::b: return "b";
    case Var::e1: return "e1";
    case Var::e2: return "e2";
    case Var::xi: return "xi";
  }
  return "?";
}

Monomial::Monomial(const Exponents& e) {
  int deg = 0;
  for (int v = 0; v < kNumVars; ++v) {
    deg += e[v];
    if (!field_fits(v + 1, e[v])) throw std::overflow_error("monomial exponent out of range");
  }
  if (!field_fits(0, deg)) throw std::overflow_error("monomial degree out of range");
  std::uint64_t key = (std::uint64_t(deg + kSignedBias) << kDegShift) |
                      (std::uint64_t(e[0] + kSignedBias) << kQShift);
  for (int v = 1; v < kNumVars; ++v) key |= std::uint64_t(e[v]) << unsigned_shift(static_cast<Var>(v));
  key_ = key;
}

Monomial Monomial::of(Var v, int e) {
  Exponents ex{};
  ex[static_cast<int>(v)] = e;
  return Monomial(ex);
}

int Monomial::exp(Var v) const { return field_value(key_, static_cast<int>(v) + 1); }

Monomial::Exponents Monomial::exponents() const {
  Exponents e;
  for (int v = 0; v < kNumVars; ++v) e[v] = exp(static_cast<Var>(v));
  return e;
}

int Monomial::degree() const { return field_value(key_, 0); }

Monomial operator*(Monomial x, Monomial y) {
  Monomial::Exponents ex = x.exponents();
  const Monomial::Exponents ey = y.exponents();
  for (int v = 0; v < kNumVars; ++v) ex[v] += ey[v];
  return Monomial(ex);
}

bool Monomial::divides(Monomial other) const {
  for (int v = 1; v < kNumVars; ++v)
    if (exp(static_cast<Var>(v)) > other.exp(static_cast<Var>(v))) return false;
  return true;
}

Monomial operator/(Monomial x, Monomial y) {
  if (!y.divides(x)) throw std::domain_error("monomial does not divide");
  Monomial::Exponents ex = x.exponents();
  const Monomial::Exponents ey = y.exponents();
  for (int v = 0; v < kNumVars; ++v) ex[v] -= ey[v];
  return Monomial(ex);
}

// ---------------------------------------------------------------------------
// ParamPoly

ParamPoly::ParamPoly(long c) {
  if (c != 0) terms_.emplace_back(Monomial(), Integer(c));
}

ParamPoly::ParamPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

ParamPoly ParamPoly::var(Var v, int e) { return term(Monomial::of(v, e), 1); }

ParamPoly ParamPoly::term(Monomial m, Integer c) {
  ParamPoly p;
  if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return l.first < r.first; });
  ParamPoly p;
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

Integer ParamPoly::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

std::pair<int, int> ParamPoly::exp_range(Var v) const {
  if (terms_.empty()) return {0, 0};
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) {
    lo = std::min(lo, m.exp(v));
    hi = std::max(hi, m.exp(v));
  }
  return {lo, hi};
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, false, NoOp{});
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, true, NoOp{});
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly operator+(const ParamPoly& x, const ParamPoly& y) {
  ParamPoly r;
  r.terms_ = merge_terms(x.terms_, y.terms_, false, NoOp{});
  return r;
}

ParamPoly operator-(const ParamPoly& x, const ParamPoly& y) {
  ParamPoly r;
  r.terms_ = merge_terms(x.terms_, y.terms_, true, NoOp{});
  return r;
}

ParamPoly operator-(const ParamPoly& x) {
  ParamPoly r = x;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
  ParamPoly r;
  if (x.is_zero() || y.is_zero()) return r;
  if (x.size() == 1 && x.terms_[0].first.is_one()) return y.scaled(x.terms_[0].second);
  if (y.size() == 1 && y.terms_[0].first.is_one()) return x.scaled(y.terms_[0].second);
  r.terms_ = x.size() <= y.size() ? mul_terms(x.terms_, y.terms_) : mul_terms(y.terms_, x.terms_);
  return r;
}

bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }

ParamPoly ParamPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

ParamPoly ParamPoly::shifted(Monomial m) const {
  ParamPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mon, c] : terms_) r.terms_.emplace_back(mon * m, c);
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

void ParamPolyAccumulator::add(const ParamPoly& p) {
  for (const auto& [m, c] : p.terms()) acc_[m.key()] += c;
}

void ParamPolyAccumulator::add(const ParamPoly& p, const Integer& scale) {
  for (const auto& [m, c] : p.terms()) {
    Integer& slot = acc_[m.key()];
    mpz_addmul(slot.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
  }
}

ParamPoly ParamPolyAccumulator::take() {
  std::vector<ParamPoly::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [k, c] : acc_)
    if (c != 0) terms.emplace_back(Monomial::from_key(k), std::move(c));
  acc_.clear();
  return ParamPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// q-analogues

ParamPoly q_pow(int e) { return ParamPoly::var(Var::q, e); }

ParamPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  std::vector<ParamPoly::Term> t;
  for (int i = 0; i < n; ++i) t.emplace_back(Monomial::of(Var::q, i), 1);
  return ParamPoly::from_terms(std::move(t));
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ParamPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  if (k == 0 || k == n) return 1;
  static std::mutex mu;
  static std::map<std::pair<int, int>, ParamPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
  }
  // Dense rows of the q-Pascal triangle: [m, j] = [m-1, j-1] + q^j [m-1, j].
  std::vector<std::vector<Integer>> row(static_cast<std::size_t>(k) + 1);
  row[0] = {1};
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      std::vector<Integer> next(static_cast<std::size_t>(j * (m - j)) + 1, 0);
      const auto& left = row[j - 1];
      for (std::size_t d = 0; d < left.size() && d < next.size(); ++d) next[d] += left[d];
      const auto& up = row[j];
      for (std::size_t d = 0; d < up.size(); ++d)
        if (d + j < next.size()) next[d + j] += up[d];
      row[j] = std::move(next);
    }
  }
  std::vector<ParamPoly::Term> t;
  for (std::size_t d = 0; d < row[k].size(); ++d)
    if (row[k][d] != 0) t.emplace_back(Monomial::of(Var::q, static_cast<int>(d)), row[k][d]);
  ParamPoly result = ParamPoly::from_terms(std::move(t));
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(n, k), result);
  return result;
}

// ---------------------------------------------------------------------------
// Predicates, evaluation, substitution, division

bool is_nonneg(const ParamPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (c < 0 || m.exp(Var::q) < 0) return false;
  return true;
}

const Rational& RationalPoint::operator[](Var v) const {
  switch (v) {
    case Var::q: return q;
    case Var::a: return a;
    case Var::b: return b;
    case Var::e1: return e1;
    case Var::e2: return e2;
    case Var::xi: return xi;
  }
  throw std::invalid_argument("bad variable");
}

namespace {

class PowerCache {
 public:
  explicit PowerCache(Rational base) : base_(std::move(base)) { pos_.push_back(1); }
  Rational get(int e) {
    if (e >= 0) {
      while (static_cast<int>(pos_.size()) <= e) pos_.push_back(pos_.back() * base_);
      return pos_[static_cast<std::size_t>(e)];
    }
    if (base_ == 0) throw std::domain_error("negative power of zero");
    if (neg_.empty()) neg_.push_back(1);
    const Rational inv = 1 / base_;
    while (static_cast<int>(neg_.size()) <= -e) neg_.push_back(neg_.back() * inv);
    return neg_[static_cast<std::size_t>(-e)];
  }

 private:
  Rational base_;
  std::vector<Rational> pos_, neg_;
};

}  // namespace

Rational eval_rational(const ParamPoly& p, const RationalPoint& pt) {
  std::vector<PowerCache> powers;
  for (int v = 0; v < kNumVars; ++v) powers.emplace_back(pt[static_cast<Var>(v)]);
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (int v = 0; v < kNumVars; ++v) {
      const int e = m.exp(static_cast<Var>(v));
      if (e != 0) t *= powers[v].get(e);
    }
    sum += t;
  }
  sum.canonicalize();
  return sum;
}

namespace {

// value^e for possibly negative e; negative powers need a signed unit monomial.
ParamPoly signed_power(const ParamPoly& value, int e) {
  if (e >= 0) return value.pow(static_cast<unsigned>(e));
  if (value.size() != 1 || abs(value.terms()[0].second) != 1)
    throw std::domain_error("negative power of a non-unit in substitution");
  const auto& [m, c] = value.terms()[0];
  ParamPoly inv = ParamPoly::term(Monomial() / m, c);
  return inv.pow(static_cast<unsigned>(-e));
}

}  // namespace

ParamPoly substitute(const ParamPoly& p, std::span<const std::pair<Var, ParamPoly>> assignments) {
  // Group terms by the exponents of the substituted variables.
  std::map<std::vector<int>, std::vector<ParamPoly::Term>> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial::Exponents rest = m.exponents();
    std::vector<int> key;
    key.reserve(assignments.size());
    for (const auto& [v, value] : assignments) {
      key.push_back(rest[static_cast<int>(v)]);
      rest[static_cast<int>(v)] = 0;
    }
    groups[key].emplace_back(Monomial(rest), c);
  }
  std::vector<std::map<int, ParamPoly>> power_cache(assignments.size());
  ParamPoly result;
  for (auto& [key, terms] : groups) {
    ParamPoly factor(1);
    for (std::size_t i = 0; i < assignments.size(); ++i) {
      if (key[i] == 0) continue;
      auto it = power_cache[i].find(key[i]);
      if (it == power_cache[i].end())
        it = power_cache[i].emplace(key[i], signed_power(assignments[i].second, key[i])).first;
      factor *= it->second;
    }
    result += factor * ParamPoly::from_terms(std::move(terms));
  }
  return result;
}

ParamPoly substitute(const ParamPoly& p, Var v, const ParamPoly& value) {
  const std::pair<Var, ParamPoly> one[] = {{v, value}};
  return substitute(p, std::span<const std::pair<Var, ParamPoly>>(one));
}

ParamPoly divide_exact(const ParamPoly& p, const ParamPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return {};
  // Clear negative q powers so the division runs in an honest polynomial ring.
  const int shift_p = p.exp_range(Var::q).first;
  const int shift_d = divisor.exp_range(Var::q).first;
  ParamPoly rem = p.shifted(Monomial::of(Var::q, -shift_p));
  const ParamPoly d = divisor.shifted(Monomial::of(Var::q, -shift_d));
  const auto& [lm, lc] = d.leading();
  std::vector<ParamPoly::Term> quotient;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    if (!lm.divides(rm) || rm.exp(Var::q) < lm.exp(Var::q) || !mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
    const Monomial m = rm / lm;
    quotient.emplace_back(m, c);
    rem -= d.shifted(m).scaled(c);
  }
  return ParamPoly::from_terms(std::move(quotient)).shifted(Monomial::of(Var::q, shift_p - shift_d));
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

constexpr Var kTextOrder[] = {Var::a, Var::b, Var::e1, Var::e2, Var::q, Var::xi};

std::string monomial_text(Monomial m) {
  std::string s;
  for (Var v : kTextOrder) {
    const int e = m.exp(v);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += var_name(v);
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string to_text(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
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

nlohmann::json to_json(const ParamPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto e = it->first.exponents();
    terms.push_back({{"exps", std::vector<int>(e.begin(), e.end())}, {"coeff", it->second.get_str()}});
  }
  return {{"terms", terms}};
}

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

ParamPoly parse_param_poly(std::string_view text) {
  auto resolve = [](std::string_view name, int e, std::size_t pos) -> ParamPoly {
    for (int v = 0; v < kNumVars; ++v) {
      if (name != var_name(static_cast<Var>(v))) continue;
      if (e < 0 && v != 0) throw ParseError("negative exponent on " + std::string(name), pos);
      try {
        return ParamPoly::var(static_cast<Var>(v), e);
      } catch (const std::overflow_error&) {
        throw ParseError("exponent out of range", pos);
      }
    }
    throw ParseError("unknown variable '" + std::string(name) + "'", pos);
  };
  return detail::TextParser<ParamPoly>(text, resolve).parse();
}

ParamPoly param_poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("expected {\"terms\": [...]}");
  std::vector<ParamPoly::Term> terms;
  for (const auto& t : j["terms"]) {
    const auto exps = t.at("exps").get<std::vector<int>>();
    if (exps.size() != kNumVars) throw std::invalid_argument("exps must have 6 entries");
    Monomial::Exponents e;
    std::copy(exps.begin(), exps.end(), e.begin());
    terms.emplace_back(Monomial(e), Integer(t.at("coeff").get<std::string>()));
  }
  return ParamPoly::from_terms(std::move(terms));
}

}  // namespace asc
