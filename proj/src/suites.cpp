#include "asc/suites.hpp"

#include <map>
#include <stdexcept>

#include "asc/minors.hpp"
#include "asc/moments.hpp"
#include "asc/parallel.hpp"
#include "asc/recurrence.hpp"
#include "asc/setpair.hpp"
#include "asc/young.hpp"

namespace asc {

namespace {

std::string cap(const std::string& what, int max) { return " (" + what + "<=" + std::to_string(max) + ")"; }

std::vector<std::pair<int, int>> nk_pairs(int max, int lo) {
  std::vector<std::pair<int, int>> out;
  for (int total = 0; total <= max; ++total)
    for (int n = lo; n <= total - lo; ++n) out.emplace_back(n, total - n);
  return out;
}

// Folds entries that differ only in a trailing tag into one entry per name.
class Folder {
 public:
  void add(const std::string& name, bool pass, const std::string& where) {
    auto [it, fresh] = index_.try_emplace(name, entries_.size());
    if (fresh) {
      entries_.emplace_back();
      entries_.back().name = name;
    }
    Entry& e = entries_[it->second];
    ++e.total;
    if (!pass && e.failed++ == 0) e.first_failure = where;
  }
  void emit(Report& rep, const std::string& suffix) const {
    for (const auto& e : entries_) {
      std::string detail = std::to_string(e.total - e.failed) + "/" + std::to_string(e.total) + " cases";
      if (e.failed) detail += ", first failure: " + e.first_failure;
      rep.add(e.name + suffix, e.failed == 0, detail);
    }
  }

 private:
  struct Entry {
    std::string name;
    std::size_t total = 0;
    std::size_t failed = 0;
    std::string first_failure;
  };
  std::map<std::string, std::size_t> index_;
  std::vector<Entry> entries_;
};

}  // namespace

Report section3_suite(int max, unsigned jobs) {
  Report rep("section3");
  const auto cases = nk_pairs(max, 1);
  const auto reports = parallel_map(cases.size(), jobs, [&](std::size_t i) {
    return verify_section3(cases[i].first, cases[i].second);
  });
  Folder fold;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const std::string tag = " (n=" + std::to_string(cases[i].first) + ",k=" + std::to_string(cases[i].second) + ")";
    for (const auto& c : reports[i].checks()) {
      std::string base = c.name;
      if (base.size() >= tag.size() && base.compare(base.size() - tag.size(), tag.size(), tag) == 0)
        base.erase(base.size() - tag.size());
      fold.add(base, c.pass, tag.substr(1) + (c.detail.empty() ? "" : " " + c.detail));
    }
  }
  fold.emit(rep, cap("n+k", max));
  rep.merge(verify_weight_modification(max + 2));
  return rep;
}

Report formulas_suite(int max, unsigned jobs) {
  Report rep("formulas");
  const auto cases = nk_pairs(max, 0);
  struct Outcome {
    bool equal = false;
    bool nonneg = false;
  };
  const auto outcomes = parallel_map(cases.size(), jobs, [&](std::size_t i) {
    const auto [n, k] = cases[i];
    const ParamPoly rec = g(n + k, n);
    return Outcome{coeff_young(n, k) == rec && coeff_setpair(n, k) == rec, is_nonneg(rec)};
  });
  Tally eq, pos;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto where = [&] { return "n=" + std::to_string(cases[i].first) + " k=" + std::to_string(cases[i].second); };
    eq.record(outcomes[i].equal, where);
    pos.record(outcomes[i].nonneg, where);
  }
  rep.add("young_setpair_recurrence" + cap("n+k", max), eq.pass(), eq.summary());
  rep.add("coefficients_nonneg" + cap("n+k", max), pos.pass(), pos.summary());

  Tally q1, fug;
  const Specialization koornwinder = parse_specialization("a=xi*a,e1=xi*a*b,e2=a*b");
  const RecurrenceSpec prime = spec_prime(), fugacity = spec_fugacity();
  for (int n = 0; n <= max; ++n)
    for (int k = 0; k <= n; ++k) {
      auto where = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };
      q1.record(substitute(g(prime, n, n - k), Var::q, ParamPoly(1)) == q1_closed_form(n, k), where);
      fug.record(g(fugacity, n, k) == koornwinder.apply(g(n, k)), where);
    }
  rep.add("q1_closed_form" + cap("n", max), q1.pass(), q1.summary());
  rep.add("fugacity_substitution" + cap("n", max), fug.pass(), fug.summary());

  const XYPoly young = coeff_young_xy(1, 2), setpair = coeff_setpair_xy(1, 2);
  const bool g31 = young != setpair && specialize_xy(young) == g(3, 1) && specialize_xy(setpair) == g(3, 1) &&
                   swap_xy(setpair) == setpair && swap_xy(young) != young;
  rep.add("g31_forms", g31, "X/Y forms differ, specializations agree");
  return rep;
}

Report minors_suite(int max, unsigned jobs) {
  const int N = max + 1;
  Report rep = sweep_positivity(N, 3, jobs);
  const CoeffMatrix G = build_G(N);
  const Specialization koornwinder = parse_specialization("a=xi*a,e1=xi*a*b,e2=a*b");
  {
    Tally t;
    for (const auto& r : sweep_minors(specialize(G, koornwinder), 3, jobs))
      if (r.nonvanishing)
        t.record(r.nonneg, [&] { return "rows " + set_text(r.rows) + " cols " + set_text(r.cols); });
    rep.add("minors koornwinder (N=" + std::to_string(N) + ",size<=3)", t.pass(), t.summary());
  }
  {
    const RecurrenceSpec fugacity = spec_fugacity();
    const CoeffMatrix K = specialize(G, koornwinder);
    bool same = true;
    for (int n = 0; n < N; ++n)
      for (int i = 0; i < N; ++i) same = same && K.at(n, i) == g(fugacity, n, i);
    rep.add("koornwinder_matrix" + cap("N", N), same, "specialized G equals the fugacity coefficient matrix");
  }
  {
    const CoeffMatrix young = build_G(N, CoeffMethod::young), setpair = build_G(N, CoeffMethod::setpair);
    rep.add("G_methods_agree" + cap("N", N), young.entries() == G.entries() && setpair.entries() == G.entries(),
            "recurrence, young, setpair");
  }
  {
    std::vector<std::tuple<int, int, int>> cases;
    for (int n = 0; n <= N; ++n)
      for (int a = 0; n + a <= N; ++a)
        for (int b = 0; n + a + b <= N; ++b) cases.emplace_back(n, a, b);
    const auto ok = parallel_map(cases.size(), jobs, [&](std::size_t i) {
      const auto [n, a, b] = cases[i];
      return verify_2pos(n, a, b).nonneg;
    });
    Tally t;
    for (std::size_t i = 0; i < cases.size(); ++i)
      t.record(ok[i], [&] {
        const auto [n, a, b] = cases[i];
        return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
      });
    rep.add("2pos" + cap("n+a+b", N), t.pass(), t.summary());
  }
  MInequalityRanges ranges;
  ranges.dominance = ranges.product = max;
  ranges.key = max - 1;
  ranges.product_rule = std::min(max, 4);
  rep.merge(verify_M_inequalities(ranges));
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"section3", "section4", "minors", "pasep", "formulas", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (opt.max < 1) throw std::invalid_argument("suite size cap must be at least 1");
  if (name == "section3") return section3_suite(opt.max, opt.jobs);
  if (name == "section4") return verify_section4(Section4Ranges::uniform(opt.max));
  if (name == "minors") return minors_suite(opt.max, opt.jobs);
  if (name == "formulas") return formulas_suite(opt.max, opt.jobs);
  if (name == "pasep") {
    PasepRanges r = PasepRanges::uniform(opt.max);
    r.seed = opt.seed;
    r.points = opt.points;
    return verify_pasep_suite(r);
  }
  if (name == "all") {
    Report rep("all");
    for (const auto& s : suite_names())
      if (s != "all") rep.merge(run_suite(s, opt));
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace asc
