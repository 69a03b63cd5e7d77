#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "skewmorph/permutation.hpp"

using namespace skewmorph;

namespace {

const Permutation z8 = Permutation::from_cycles(8, {{1, 3, 5, 7}});

Permutation random_permutation(std::int32_t degree, std::mt19937_64& rng) {
  std::vector<std::int32_t> image(static_cast<std::size_t>(degree));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(image);
}

}  // namespace

TEST_CASE("construction validates bijectivity") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  CHECK(Permutation({0, 3, 2, 5, 4, 7, 6, 1}) == z8);
  CHECK(z8.to_cycle_string() == "(0)(1 3 5 7)(2)(4)(6)");
}

TEST_CASE("compose applies the left argument first") {
  const Permutation swap({1, 0});
  CHECK(compose(swap, swap).is_identity());
  CHECK(compose(Permutation::identity(8), z8) == z8);
  const Permutation sq = compose(z8, z8);
  CHECK(sq(1) == 5);
  CHECK(sq(3) == 7);
  CHECK(sq(5) == 1);
  CHECK(sq(7) == 3);
  for (std::int32_t i : {0, 2, 4, 6}) CHECK(sq(i) == i);
  const Permutation p({1, 2, 0}), q({0, 2, 1});
  CHECK(compose(p, q)(0) == q(p(0)));
  CHECK_THROWS_AS(compose(p, z8), std::invalid_argument);
}

TEST_CASE("order, power and orbits") {
  CHECK(order(Permutation::identity(5)) == 1);
  CHECK(order(z8) == 4);
  CHECK(order(Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}})) == 6);
  CHECK(power(z8, 0).is_identity());
  CHECK(power(z8, -1) == Permutation::from_cycles(8, {{1, 7, 5, 3}}));
  CHECK(power(z8, -1).to_cycle_string() == "(0)(1 7 5 3)(2)(4)(6)");
  const Permutation c3 = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(power(c3, 4) == c3);
  CHECK(orbits(Permutation::identity(3)) == std::vector<Cycle>{{0}, {1}, {2}});
  CHECK(orbits(z8) == std::vector<Cycle>{{0}, {1, 3, 5, 7}, {2}, {4}, {6}});
  CHECK(orbits(Permutation::from_cycles(4, {{0, 2}, {1, 3}})) == std::vector<Cycle>{{0, 2}, {1, 3}});
}

TEST_CASE("random permutations: laws") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int32_t degree = 1 + static_cast<std::int32_t>(rng() % 12);
    const Permutation p = random_permutation(degree, rng), q = random_permutation(degree, rng),
                      r = random_permutation(degree, rng);
    REQUIRE(compose(compose(p, q), r) == compose(p, compose(q, r)));
    const auto k = order(p);
    REQUIRE(power(p, k).is_identity());
    for (std::int64_t j = 1; j < k; ++j) REQUIRE_FALSE(power(p, j).is_identity());
    REQUIRE(compose(p, p.inverse()).is_identity());
    const CycleIndex index(p);
    for (std::int64_t e = -7; e <= 7; ++e) {
      const Permutation pe = power(p, e);
      for (std::int32_t i = 0; i < degree; ++i) REQUIRE(index.apply_power(i, e) == pe(i));
    }
    std::vector<std::int32_t> seen;
    for (const Cycle& c : orbits(p)) seen.insert(seen.end(), c.begin(), c.end());
    std::sort(seen.begin(), seen.end());
    std::vector<std::int32_t> all(static_cast<std::size_t>(degree));
    std::iota(all.begin(), all.end(), 0);
    REQUIRE(seen == all);
  }
}
