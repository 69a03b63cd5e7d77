#include <doctest.h>

#include "skewmorph/verify.hpp"

using namespace skewmorph;

TEST_CASE("negation conjugate") {
  const auto z8 = *is_skew_morphism(8, Permutation({0, 3, 2, 5, 4, 7, 6, 1}));
  const auto c = negation_conjugate(z8);
  for (std::int32_t x = 0; x < 8; ++x) CHECK(c.phi()(x) == (8 - z8.phi()((8 - x) % 8)) % 8);
  CHECK(negation_conjugate(c) == z8);
}

TEST_CASE("every suite passes for max = 7") {
  int seen = 0;
  const auto results = run_property_suites(7, 2, 0, [&](const SuiteResult&) { ++seen; });
  CHECK(seen == static_cast<int>(results.size()));
  CHECK(results.size() >= 10);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
    CHECK(r.checks > 0);
  }
  CHECK_THROWS_AS(run_property_suites(0), std::invalid_argument);
}
