#include "asc/report.hpp"

#include <algorithm>

namespace asc {

void Report::add(std::string name, bool pass, std::string detail) {
  checks_.push_back({std::move(name), pass, std::move(detail), suite_});
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.pass; }));
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.name;
    if (!c.detail.empty()) out += " [" + c.detail + "]";
    out += '\n';
  }
  return out;
}

std::string Report::to_json_lines() const {
  std::string out;
  for (const auto& c : checks_) {
    nlohmann::json j = {{"suite", c.suite}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    out += j.dump() + '\n';
  }
  return out;
}

std::string Tally::summary() const {
  std::string s = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " instances";
  if (failed_ > 0) s += ", first failure: " + first_failure_;
  return s;
}

}  // namespace asc
