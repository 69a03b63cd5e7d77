#pragma once

// Property suites run by `skewmorph verify-all`. Every suite recomputes from
// scratch (no cache) and counts individual checks.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skewmorph/skew.hpp"

namespace skewmorph {

struct SuiteResult {
  std::string name;
  std::int64_t checks = 0;
  bool passed = true;
  /// First failure, empty when passed.
  std::string detail;
};

/// x -> -s(-x), the conjugate of s by negation.
SkewMorphism negation_conjugate(const SkewMorphism& s);

/// Runs every suite for moduli up to `max` (oracle comparisons stop at
/// kBruteForceLimit). `progress` is called after each suite if set.
std::vector<SuiteResult> run_property_suites(std::int32_t max, unsigned jobs = 1, std::uint64_t seed = 0,
                                             const std::function<void(const SuiteResult&)>& progress = {});

}  // namespace skewmorph
