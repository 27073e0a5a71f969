#pragma once

#include <string>
#include <vector>

namespace ramsey {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // what was checked, or the first failure
  long long elapsed_ms = 0;
  long long budget_ms = 0;
};

/// The bundled verification criteria; quick runs 1-5, full runs 1-8.
/// Each criterion is pinned to its exact expected values and time budget.
std::vector<CriterionResult> run_suite(bool full);

bool suite_passes(const std::vector<CriterionResult>& results);

}  // namespace ramsey
