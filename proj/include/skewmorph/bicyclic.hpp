#pragma once

// Exact (m, n)-bicyclic triples (G; a, b) with |a| = m, |b| = n and
// <a> ∩ <b> = 1. Every element is a^y b^x for a unique (y, x), and a
// reciprocal pair (phi, phi_star) drives the multiplication through
//
//     b^l a^y = a^{phi_star^l(y)} b^{sigma*(y, l)},
//     sigma*(y, l) = sum_{i=1..l} pi*(phi_star^{i-1}(y))   (mod n),
//
// so (y1, x1)(y2, x2) = (y1 + phi_star^{x1}(y2), sigma*(y2, x1) + x2).

#include <cstdint>
#include <optional>
#include <vector>

#include "skewmorph/permutation.hpp"
#include "skewmorph/reciprocal.hpp"

namespace skewmorph {

/// The element a^y b^x.
struct GroupElement {
  Residue y;
  Residue x;

  bool operator==(const GroupElement&) const = default;
};

class BicyclicTriple {
 public:
  std::int32_t m() const noexcept { return pair_.m(); }
  std::int32_t n() const noexcept { return pair_.n(); }
  std::int32_t size() const noexcept { return m() * n(); }
  const ReciprocalPair& pair() const noexcept { return pair_; }

  GroupElement identity() const { return element(0, 0); }
  GroupElement a() const { return element(1, 0); }
  GroupElement b() const { return element(0, 1); }
  GroupElement element(std::int64_t y, std::int64_t x) const { return {Residue(y, m()), Residue(x, n())}; }

  /// Row-major index y * n + x, used for edge labels and Cayley tables.
  std::int32_t index_of(const GroupElement& g) const noexcept { return g.y.value() * n() + g.x.value(); }
  GroupElement element_at(std::int32_t index) const { return element(index / n(), index % n()); }

  /// Product on raw coordinates, no validation.
  std::pair<std::int32_t, std::int32_t> multiply_raw(std::int32_t y1, std::int32_t x1, std::int32_t y2,
                                                     std::int32_t x2) const noexcept {
    const std::size_t row = static_cast<std::size_t>(x1) * static_cast<std::size_t>(m()) + static_cast<std::size_t>(y2);
    std::int32_t y = y1 + star_power_[row];
    if (y >= m()) y -= m();
    std::int32_t x = sigma_star_[row] + x2;
    if (x >= n()) x -= n();
    return {y, x};
  }

 private:
  explicit BicyclicTriple(ReciprocalPair pair);

  friend BicyclicTriple triple_from_pair(const ReciprocalPair& pair, std::uint64_t seed);

  friend std::pair<Residue, Residue> b_first_form(const BicyclicTriple& t, const GroupElement& g);

  ReciprocalPair pair_;
  // Row l holds phi_star^l, its inverse, and sigma*(., l) for l in [0, n).
  std::vector<std::int32_t> star_power_;
  std::vector<std::int32_t> star_power_inverse_;
  std::vector<std::int32_t> sigma_star_;
};

/// Full check of associativity at or below this group order; sampled above.
inline constexpr std::int32_t kFullAssociativityLimit = 200;
inline constexpr int kAssociativitySamples = 10000;

/// Builds and verifies the triple of a standard-convention pair: associativity
/// (exhaustive up to kFullAssociativityLimit, otherwise kAssociativitySamples
/// random triples drawn from `seed`), identity, inverses, |a| = m, |b| = n.
/// Throws std::invalid_argument for a mirror-convention pair and
/// SelfCheckFailure if verification fails.
BicyclicTriple triple_from_pair(const ReciprocalPair& pair, std::uint64_t seed = 0);

/// Throws std::invalid_argument if an element does not belong to t.
GroupElement multiply(const BicyclicTriple& t, const GroupElement& g, const GroupElement& h);

std::int32_t element_order(const BicyclicTriple& t, const GroupElement& g);

/// The unique (i, j) with b^i a^j = g; i in Z_n, j in Z_m.
std::pair<Residue, Residue> b_first_form(const BicyclicTriple& t, const GroupElement& g);

/// The pair induced by the generators: a b^x = b^{phi(x)} a^{pi(x)} and
/// b a^y = a^{phi_star(y)} b^{pi*(y)}. Throws SelfCheckFailure if the induced
/// maps are not a reciprocal pair with exactly these power tables.
ReciprocalPair induced_pair(const BicyclicTriple& t);

/// The standard pair of the mirror triple (G; a^-1, b^-1).
ReciprocalPair mirror_pair(const BicyclicTriple& t);

/// Generators acting on m + n points: 0..m-1 carry Z_m, m..m+n-1 carry Z_n.
/// a is y -> y+1 on Z_m and phi on Z_n; b is phi_star on Z_m and x -> x+1 on Z_n.
struct PermutationModel {
  std::int32_t m;
  std::int32_t n;
  Permutation a;
  Permutation b;
};

/// Builds the model and checks that <a, b> has exactly m*n elements.
/// Throws SelfCheckFailure if the closure is larger.
PermutationModel permutation_model(const ReciprocalPair& pair);

/// a^y b^x in the model (function notation: b^x acts first).
Permutation model_element(const PermutationModel& model, std::int32_t y, std::int32_t x);

/// True when (y, x) -> a^y b^x is injective on the model and carries the
/// triple's multiplication to composition. Exhaustive up to
/// kFullAssociativityLimit elements, otherwise checked against the generators.
bool model_matches_triple(const PermutationModel& model, const BicyclicTriple& t);

/// The pair induced by the model's generators, read off by comparing
/// permutations only (independent of the normal-form multiplication).
ReciprocalPair pair_from_model(const PermutationModel& model);

/// Whether a1^y b1^x -> a2^y b2^x is an isomorphism. Decided by the product
/// table (exhaustively up to kFullAssociativityLimit elements, else on
/// generator products) and cross-checked against equality of induced pairs.
bool triples_equivalent(const BicyclicTriple& t1, const BicyclicTriple& t2);

bool is_abelian(const BicyclicTriple& t);

/// A standard pair with a non-abelian triple built from a unit of prime
/// multiplicative order p: (id_n, y -> s*y mod m) when p | gcd(n, phi(m)),
/// else (x -> s*x mod n, id_m) when p | gcd(m, phi(n)). Smallest p first,
/// then smallest s. nullopt exactly when (m, n) is singular.
std::optional<ReciprocalPair> nonabelian_witness_pair(std::int32_t m, std::int32_t n);

/// Row-major Cayley table, entry [i * size + j] = index_of(element_at(i) * element_at(j)).
std::vector<std::int32_t> cayley_table(const BicyclicTriple& t);

}  // namespace skewmorph
