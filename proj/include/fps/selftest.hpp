#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fps {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
};

/// Runs a short property suite per module on seeded random inputs over
/// Q(ζ_conductor). Deterministic for a fixed seed.
std::vector<SuiteResult> selftest(std::uint64_t seed, int N = 24, int conductor = 24,
                                  int per_suite = 10);

}  // namespace fps
