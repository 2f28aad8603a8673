#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spapt {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst deviation, or the failing property
  double seconds = 0.0;
};

// Runs every invariant suite end to end with the given root seed.
std::vector<SuiteResult> run_selftest(std::uint64_t seed);

}  // namespace spapt
