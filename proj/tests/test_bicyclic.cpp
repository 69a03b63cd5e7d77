#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "skewmorph/bicyclic.hpp"
#include "skewmorph/singularity.hpp"

using namespace skewmorph;

namespace {

SkewMorphism id(std::int32_t n) { return *is_skew_morphism(n, Permutation::identity(n)); }

ReciprocalPair metacyclic() { return *is_reciprocal_pair(id(3), multiplication_map(9, 4)); }

}  // namespace

TEST_CASE("standard triple is the direct product") {
  const auto t = triple_from_pair(*is_reciprocal_pair(id(4), id(6)));
  CHECK(t.size() == 24);
  CHECK(is_abelian(t));
  for (std::int32_t y = 0; y < 6; ++y) {
    for (std::int32_t x = 0; x < 4; ++x) {
      const auto g = t.element(y, x);
      CHECK(multiply(t, g, t.element(5, 3)) == t.element(y + 5, x + 3));
      auto [i, j] = b_first_form(t, g);
      CHECK(i.value() == x);
      CHECK(j.value() == y);
    }
  }
  CHECK(element_order(t, multiply(t, t.a(), t.b())) == 12);
  const auto induced = induced_pair(t);
  CHECK(induced.phi().phi().is_identity());
  CHECK(induced.phi_star().phi().is_identity());
}

TEST_CASE("metacyclic (9, 3) triple") {
  const auto t = triple_from_pair(metacyclic());
  CHECK(multiply(t, t.a(), t.b()) == t.element(1, 1));
  CHECK(multiply(t, t.b(), t.a()) == t.element(4, 1));
  CHECK_FALSE(is_abelian(t));
  CHECK(element_order(t, t.a()) == 9);
  CHECK(element_order(t, t.b()) == 3);
  CHECK(element_order(t, t.identity()) == 1);
  CHECK(multiply(t, t.element(8, 0), t.a()) == t.identity());
  const auto g = t.element(5, 2);
  CHECK(multiply(t, g, t.identity()) == g);
  auto [i0, j0] = b_first_form(t, t.identity());
  CHECK((i0.value() == 0 && j0.value() == 0));
  auto [i2, j2] = b_first_form(t, t.element(0, 2));
  CHECK((i2.value() == 2 && j2.value() == 0));
  const auto p = induced_pair(t);
  CHECK(p == metacyclic());
  // pi(x) = 7^x mod 9 in extended form
  for (std::int32_t x = 0; x < 3; ++x) CHECK(p.pi_ext()[static_cast<std::size_t>(x)] == mod_pow(7, x, 9));
}

TEST_CASE("element validation") {
  const auto t = triple_from_pair(metacyclic());
  CHECK_THROWS_AS(multiply(t, GroupElement{Residue(0, 3), Residue(0, 3)}, t.a()), std::invalid_argument);
  const auto mirror = *is_reciprocal_pair_mirror(id(3), id(3));
  CHECK_THROWS_AS(triple_from_pair(mirror), std::invalid_argument);
}

TEST_CASE("round trip and permutation model for m, n <= 8") {
  for (std::int32_t m = 1; m <= 8; ++m) {
    for (std::int32_t n = 1; n <= 8; ++n) {
      for (const auto& p : enumerate_reciprocal_pairs(m, n)) {
        const auto t = triple_from_pair(p);
        REQUIRE(induced_pair(t) == p);
        const auto model = permutation_model(p);
        REQUIRE(model_matches_triple(model, t));
        REQUIRE(pair_from_model(model) == p);
        const auto mirror = mirror_pair(t);
        REQUIRE(is_reciprocal_pair(mirror.phi(), mirror.phi_star()).has_value());
      }
    }
  }
}

TEST_CASE("permutation model of the Z_8 symmetric pair") {
  const auto z8 = *is_skew_morphism(8, Permutation({0, 3, 2, 5, 4, 7, 6, 1}));
  const auto p = *is_reciprocal_pair(z8, z8);
  const auto model = permutation_model(p);
  CHECK(model.a.degree() == 16);
  CHECK(model_matches_triple(model, triple_from_pair(p)));
}

TEST_CASE("equivalence is equality of pairs") {
  for (std::int32_t m = 1; m <= 6; ++m) {
    for (std::int32_t n = 1; n <= 6; ++n) {
      const auto pairs = enumerate_reciprocal_pairs(m, n);
      std::vector<BicyclicTriple> triples;
      for (const auto& p : pairs) triples.push_back(triple_from_pair(p));
      for (std::size_t i = 0; i < triples.size(); ++i) {
        for (std::size_t j = 0; j < triples.size(); ++j) CHECK(triples_equivalent(triples[i], triples[j]) == (i == j));
      }
    }
  }
  const auto a = triple_from_pair(metacyclic());
  CHECK_FALSE(triples_equivalent(a, triple_from_pair(*is_reciprocal_pair(id(3), id(9)))));
  CHECK_FALSE(triples_equivalent(a, triple_from_pair(*is_reciprocal_pair(id(9), id(3)))));
}

TEST_CASE("large triple: sampled associativity is seeded") {
  const auto pairs = enumerate_reciprocal_pairs(9, 27);
  for (const auto& p : pairs) {
    const auto t = triple_from_pair(p, 12345);
    CHECK(t.size() == 243);
    CHECK(induced_pair(t) == p);
  }
  CHECK(triples_equivalent(triple_from_pair(pairs[3]), triple_from_pair(pairs[3])));
  CHECK_FALSE(triples_equivalent(triple_from_pair(pairs[3]), triple_from_pair(pairs[4])));
}

TEST_CASE("nonabelian witnesses") {
  const auto w = nonabelian_witness_pair(9, 3);
  REQUIRE(w);
  CHECK(w->phi().phi().is_identity());
  CHECK(w->phi_star() == multiplication_map(9, 4));
  CHECK_FALSE(nonabelian_witness_pair(3, 5).has_value());
  const auto s3 = nonabelian_witness_pair(2, 3);
  REQUIRE(s3);
  CHECK(s3->phi() == multiplication_map(3, 2));
  const auto t = triple_from_pair(*s3);
  CHECK(t.size() == 6);
  CHECK_FALSE(is_abelian(t));
  for (std::int32_t m = 1; m <= 20; ++m) {
    for (std::int32_t n = 1; n <= 20; ++n) CHECK(nonabelian_witness_pair(m, n).has_value() == !is_singular(m, n));
  }
}

TEST_CASE("cayley table") {
  const auto t = triple_from_pair(*is_reciprocal_pair(multiplication_map(3, 2), id(2)));
  const auto table = cayley_table(t);
  REQUIRE(table.size() == 36);
  for (std::int32_t g = 0; g < 6; ++g) {
    std::vector<std::int32_t> row(table.begin() + g * 6, table.begin() + g * 6 + 6);
    std::sort(row.begin(), row.end());
    std::vector<std::int32_t> all(6);
    std::iota(all.begin(), all.end(), 0);
    CHECK(row == all);
  }
}
