#include <doctest.h>

#include <algorithm>

#include "skewmorph/reciprocal.hpp"

using namespace skewmorph;

namespace {

SkewMorphism id(std::int32_t n) { return *is_skew_morphism(n, Permutation::identity(n)); }
const SkewMorphism z8 = *is_skew_morphism(8, Permutation({0, 3, 2, 5, 4, 7, 6, 1}));

}  // namespace

TEST_CASE("extended_pi") {
  CHECK(extended_pi(id(5), 7) == std::vector<std::int32_t>(7, 1));
  // -10^{-1}(-1) mod 27 with 10^{-1} = 19
  const auto ten = multiplication_map(27, 10);
  const auto table = extended_pi(ten, 9);
  CHECK(table[1] == 19);
  for (std::int32_t x = 0; x < 9; ++x) CHECK(table[static_cast<std::size_t>(x)] == mod_pow(19, x, 27));
  // -psi(7) with psi the inverse cycle (1 7 5 3): psi(7) = 5
  CHECK(extended_pi(z8, 8)[1] == 3);
}

TEST_CASE("mirror_pi") {
  CHECK(mirror_pi(id(4), 6) == std::vector<std::int32_t>(6, 1));
  const auto table = mirror_pi(multiplication_map(27, 10), 9);
  for (std::int32_t x = 0; x < 9; ++x) CHECK(table[static_cast<std::size_t>(x)] == mod_pow(10, x, 27));
}

TEST_CASE("is_reciprocal_pair") {
  for (std::int32_t m = 1; m <= 6; ++m) {
    for (std::int32_t n = 1; n <= 6; ++n) CHECK(is_reciprocal_pair(id(n), id(m)).has_value());
  }
  const auto p = is_reciprocal_pair(multiplication_map(9, 4), multiplication_map(27, 10));
  REQUIRE(p);
  CHECK(p->m() == 27);
  CHECK(p->n() == 9);
  CHECK(p->type() == PairType::type_i);
  CHECK(is_reciprocal_pair(id(3), multiplication_map(9, 4)).has_value());
  // |x -> 2x mod 5| = 4 does not divide 3
  CHECK_FALSE(is_reciprocal_pair(multiplication_map(5, 2), id(3)).has_value());
  CHECK_FALSE(is_reciprocal_pair_mirror(multiplication_map(5, 2), id(3)).has_value());
  CHECK(is_reciprocal_pair_mirror(multiplication_map(9, 4), multiplication_map(27, 10)).has_value());
  CHECK(is_reciprocal_pair_mirror(id(4), id(6)).has_value());
}

TEST_CASE("enumerate_reciprocal_pairs") {
  const auto single = enumerate_reciprocal_pairs(1, 1);
  REQUIRE(single.size() == 1);
  const auto singular = enumerate_reciprocal_pairs(3, 5);
  REQUIRE(singular.size() == 1);
  CHECK(singular[0].phi().phi().is_identity());
  CHECK(singular[0].phi_star().phi().is_identity());

  const auto pairs = enumerate_reciprocal_pairs(9, 27);
  CHECK(pairs.size() == 27);
  CHECK(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.type() == PairType::type_i; }) == 15);
  CHECK(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.type() == PairType::type_ii; }) == 12);
  CHECK(enumerate_reciprocal_pairs(9, 27, 3) == pairs);
  for (const auto& p : pairs) CHECK(check_corollary_identities(p));
}

TEST_CASE("swap closure for m, n <= 8") {
  for (std::int32_t m = 1; m <= 8; ++m) {
    for (std::int32_t n = 1; n <= 8; ++n) {
      const auto forward = enumerate_reciprocal_pairs(m, n), backward = enumerate_reciprocal_pairs(n, m);
      REQUIRE(forward.size() == backward.size());
      for (const auto& p : forward) CHECK(std::find(backward.begin(), backward.end(), swap_pair(p)) != backward.end());
    }
  }
}

TEST_CASE("symmetric skew-morphisms") {
  CHECK(is_symmetric_skew(id(7)));
  const auto eight = enumerate_skew_morphisms(8);
  CHECK(std::all_of(eight.begin(), eight.end(), [](const auto& s) { return is_symmetric_skew(s); }));
  CHECK_FALSE(is_symmetric_skew(multiplication_map(5, 2)));

  CHECK(symmetric_automorphism_criterion(8, 3));
  CHECK(symmetric_automorphism_criterion(11, 1));
  CHECK_FALSE(symmetric_automorphism_criterion(5, 2));
  CHECK_THROWS_AS(symmetric_automorphism_criterion(8, 2), std::invalid_argument);
  for (std::int32_t n = 1; n <= 30; ++n) {
    for (const auto& a : automorphisms(n)) CHECK(symmetric_automorphism_criterion(n, a.phi()(1 % n)) == is_symmetric_skew(a));
  }
  for (std::int32_t n = 1; n <= 12; ++n) {
    const auto pairs = enumerate_reciprocal_pairs(n, n);
    for (const auto& s : enumerate_skew_morphisms(n)) {
      const bool listed = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) { return p.phi() == s && p.phi_star() == s; });
      CHECK(listed == is_symmetric_skew(s));
    }
  }
}

TEST_CASE("identities recovering the pair") {
  CHECK(check_corollary_identities(*is_reciprocal_pair(id(4), id(6))));
  CHECK(check_corollary_identities(*is_reciprocal_pair(id(3), multiplication_map(9, 4))));
  const auto mirror = *is_reciprocal_pair_mirror(id(3), id(3));
  CHECK_THROWS_AS(check_corollary_identities(mirror), std::invalid_argument);
}

TEST_CASE("power identity table size is checked") {
  CHECK_THROWS_AS(satisfies_power_identity(z8, std::vector<std::int32_t>(5, 1)), std::invalid_argument);
  CHECK(satisfies_power_identity(z8, z8.pi()));
  CHECK_FALSE(satisfies_power_identity(z8, std::vector<std::int32_t>(8, 1)));
}
