#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pantsgraph {

/// Outcome of one verification suite. Deterministic for fixed (seed, budget):
/// no timing or environment data lands in the report.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long budget = 0;
  long trials = 0;
  long failures = 0;
  bool pass = false;
  nlohmann::json details;

  nlohmann::json to_json() const;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  long default_budget;  // 0 means exhaustive where that is meaningful
  SuiteReport (*run)(std::uint64_t seed, long budget);
};

/// All registered property suites, in a fixed order.
const std::vector<SuiteInfo>& verification_suites();

/// Runs a suite by name; budget < 0 selects the suite default.
/// Throws std::invalid_argument for unknown names.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, long budget);

}  // namespace pantsgraph
