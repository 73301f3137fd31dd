// SPDX-License-Identifier: MIT
// The acceptance suite as library code, so the test binary and the
// `verify-all` command run exactly the same checks with the same tolerances
// (every comparison is exact; there is nothing to tune).
#pragma once

#include <string>
#include <vector>

namespace rppvm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 8;

// jobs only affects the pair enumerations; results do not depend on it.
CriterionResult run_criterion(int id, int jobs = 1);
std::vector<CriterionResult> run_all_criteria(int jobs = 1);

// "[PASS] 3 title (1.23 s)" followed by indented detail lines.
// The elapsed time is left out when show_time is false, so the text is reproducible.
std::string format_result(const CriterionResult& r, bool show_time = true);

}  // namespace rppvm
