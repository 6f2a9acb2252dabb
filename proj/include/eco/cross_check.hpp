#pragma once

#include <string>
#include <vector>

namespace eco {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Engine vs formula vs recursion vs series vs enumeration, over the
/// shipped operators and series. Each entry compares two independent
/// routes to the same numbers.
std::vector<CheckResult> run_cross_checks();

}  // namespace eco
