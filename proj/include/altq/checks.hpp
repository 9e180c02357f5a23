#ifndef ALTQ_CHECKS_HPP
#define ALTQ_CHECKS_HPP

#include <set>
#include <string>
#include <vector>

#include "altq/dress.hpp"
#include "altq/report.hpp"

namespace altq {

// Batch-runner configuration; defaults reproduce the full verification run.
struct RunConfig {
  unsigned order = 3;
  unsigned k_max = 3;
  unsigned p_max = 3;
  unsigned max_degree = 8;
  FMParams params = FMParams::standard();
  std::vector<DressConfig> dress_configs;  // empty -> the three defaults
  std::set<std::string> groups;            // empty -> all

  void validate() const;
  std::vector<DressConfig> effective_dress_configs() const;
  static const std::set<std::string>& known_groups();
};

// Parse a JSON config file (string-encoded exact scalars).
RunConfig load_config(const std::string& path);

// Execute the selected groups; reports are sorted by check_id.
std::vector<CheckReport> run(const RunConfig& config);

// Deterministic JSON document (top-level array of report objects).
std::string reports_to_json(const std::vector<CheckReport>& reports);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace altq

#endif
