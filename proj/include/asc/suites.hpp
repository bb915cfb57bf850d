#pragma once

// Named verification suites as run from the command line.

#include <cstdint>
#include <string>
#include <vector>

#include "asc/report.hpp"

namespace asc {

struct SuiteOptions {
  /// Size cap; each suite maps it onto its own parameters.
  int max = 6;
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
  int points = 20;
};

/// section3, section4, minors, pasep, formulas, all.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name or max < 1. The report
/// does not depend on opt.jobs.
Report run_suite(const std::string& name, const SuiteOptions& opt = {});

/// section3 with the per-(n,k) checks of every n, k >= 1, n+k <= max folded
/// into one entry per check, plus the weight modification for l+width <= max+2.
Report section3_suite(int max, unsigned jobs = 1);

/// Young, set-pair and recurrence coefficients agree and are nonnegative for
/// n+k <= max; the q = 1 closed form and the fugacity substitution hold for
/// n <= max; the two g_{3,1} X/Y forms differ but specialize alike.
Report formulas_suite(int max, unsigned jobs = 1);

/// Minor positivity in the (max+1) x (max+1) block, 2pos for n+a+b <= max+1,
/// the M inequalities, agreement of the three ways of building G, and the
/// fugacity substitution on G.
Report minors_suite(int max, unsigned jobs = 1);

}  // namespace asc
