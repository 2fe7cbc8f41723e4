#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace altknot {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Property suite over `cases` generated diagrams of at most 30 crossings
// plus the standard torus diagrams and the bound formulas.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed, int cases);

}  // namespace altknot
