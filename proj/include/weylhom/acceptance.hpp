#pragma once

// The acceptance battery: ten exact checks with time limits, shared by the
// `check-suite` subcommand and the acceptance test binary.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace weylhom {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0;
  double limit = 0;
  std::string detail;

  bool passed() const { return correct && seconds < limit; }
};

inline constexpr int kCriterionCount = 10;

/// Runs one criterion (1-based id). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = 1);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1);

/// "[PASS] 3 binomial determinant identity (0.01 s / 1 s): ..."
std::string format_line(const CriterionResult& r);
nlohmann::json to_json(const std::vector<CriterionResult>& results);

} // namespace weylhom
