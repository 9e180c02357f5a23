#ifndef ALTQ_REPORT_HPP
#define ALTQ_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace altq {

// Outcome of one verification.  Serialization is deterministic: fields are
// emitted in fixed order and detail entries are kept in insertion order by
// construction (each check builds them the same way on every run).
struct CheckReport {
  std::string check_id;
  std::string status;        // "pass" | "fail" | "skipped"
  std::string paper_anchor;  // which printed statement this validates
  std::vector<std::pair<std::string, std::string>> details;

  bool passed() const { return status == "pass"; }

  static CheckReport pass(std::string id, std::string anchor) {
    return {std::move(id), "pass", std::move(anchor), {}};
  }
  static CheckReport fail(std::string id, std::string anchor) {
    return {std::move(id), "fail", std::move(anchor), {}};
  }
  CheckReport& note(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  CheckReport& set(bool ok) {
    status = ok ? "pass" : "fail";
    return *this;
  }
};

}  // namespace altq

#endif
