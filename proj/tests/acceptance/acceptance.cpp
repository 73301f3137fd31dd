// SPDX-License-Identifier: MIT
// Acceptance suite: one PASS/FAIL line per criterion plus its evidence.
//
//   acceptance [--jobs K] [--expect-fail 3,5]
//
// Exit status is 0 when the set of failing criteria equals the --expect-fail
// set (empty by default). The README explains why 3 and 5 are listed for
// ctest: both compare against printed values that the computation
// contradicts, and the lines above still report them as FAIL.
#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "rppvm/checks.hpp"

int main(int argc, char** argv) {
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--jobs" && i + 1 < argc) {
      jobs = std::stoi(argv[++i]);
    } else if (a == "--expect-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) expected.insert(std::stoi(tok));
    } else {
      std::cerr << "usage: acceptance [--jobs K] [--expect-fail 3,5]\n";
      return 2;
    }
  }
  std::set<int> failed;
  for (int id = 1; id <= rppvm::kCriterionCount; ++id) {
    rppvm::CriterionResult r = rppvm::run_criterion(id, jobs);
    std::cout << rppvm::format_result(r) << std::flush;
    if (!r.pass) failed.insert(id);
  }
  std::cout << "\n" << rppvm::kCriterionCount - int(failed.size()) << "/" << rppvm::kCriterionCount
            << " criteria pass";
  if (!failed.empty()) {
    std::cout << "; failing:";
    for (int id : failed) std::cout << ' ' << id;
  }
  std::cout << "\n";
  if (failed != expected) {
    std::cout << "failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
