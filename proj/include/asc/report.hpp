#pragma once

// Pass/fail records produced by the verification suites.

#include <string>
#include <vector>

#include "json.hpp"

namespace asc {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::string suite;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string name, bool pass, std::string detail = {});
  void merge(const Report& other);

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_pass() const;
  std::size_t failures() const;

  /// One line per check: "PASS name [detail]" / "FAIL name [detail]".
  std::string to_text() const;
  /// One JSON object per line: {"suite", "check", "pass", "detail"}.
  std::string to_json_lines() const;

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

/// Tallies many small checks into one report entry.
class Tally {
 public:
  /// `describe` is only invoked for the first failure.
  template <class Describe>
  void record(bool ok, Describe&& describe) {
    ++total_;
    if (ok) return;
    if (failed_++ == 0) first_failure_ = describe();
  }
  bool pass() const { return failed_ == 0; }
  std::string summary() const;

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

}  // namespace asc
