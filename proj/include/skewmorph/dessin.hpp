#pragma once

// Complete regular dessins built from exact bicyclic triples (G; a, b).
//
// Edges are the elements of G, edge index y * n + x standing for a^y b^x.
// Black vertices are the left cosets g<a>: coset b^i<a> gets label i, so there
// are n of them, each of valency m. White vertices are the left cosets g<b>:
// coset a^y<b> gets label y (m of them, valency n). rho and lambda are right
// translation by a and by b. Faces are the cycles of g -> g a b, i.e.
// compose(rho, lambda); the opposite order gives the mirror map with the same
// genus.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewmorph/bicyclic.hpp"
#include "skewmorph/permutation.hpp"

namespace skewmorph {

class Dessin {
 public:
  const BicyclicTriple& triple() const noexcept { return triple_; }
  std::int32_t m() const noexcept { return triple_.m(); }
  std::int32_t n() const noexcept { return triple_.n(); }
  std::int32_t edge_count() const noexcept { return triple_.size(); }

  const Permutation& rho() const noexcept { return rho_; }
  const Permutation& lambda() const noexcept { return lambda_; }

  std::int32_t black_of(std::int32_t edge) const { return black_[static_cast<std::size_t>(edge)]; }
  std::int32_t white_of(std::int32_t edge) const { return white_[static_cast<std::size_t>(edge)]; }

  /// Edges around black vertex i in rotation order, starting at b^i.
  Cycle black_rotation(std::int32_t i) const;
  /// Edges around white vertex y in rotation order, starting at a^y.
  Cycle white_rotation(std::int32_t y) const;

 private:
  explicit Dessin(BicyclicTriple triple);

  friend Dessin dessin_from_triple(const BicyclicTriple& t);

  BicyclicTriple triple_;
  Permutation rho_;
  Permutation lambda_;
  std::vector<std::int32_t> black_;
  std::vector<std::int32_t> white_;
};

struct DessinTopology {
  std::int32_t vertices = 0;
  std::int32_t edges = 0;
  std::int32_t faces = 0;
  std::int32_t euler_characteristic = 0;
  std::int32_t genus = 0;
};

/// Verifies the rotation structure (rho: n cycles of length m, lambda: m
/// cycles of length n), transitivity of <rho, lambda>, and that every black
/// coset meets every white coset in exactly one edge. Throws SelfCheckFailure
/// on any violation.
Dessin dessin_from_triple(const BicyclicTriple& t);

/// Face count by tracing the cycles of compose(rho, lambda).
std::int32_t faces_by_orbits(const Dessin& d);

/// Face count as m*n / |ab|.
std::int32_t faces_by_order(const Dessin& d);

/// Throws SelfCheckFailure if the two face counts disagree or the Euler
/// characteristic is odd.
DessinTopology topology(const Dessin& d);

/// Left translations commute with rho and lambda and act freely on edges.
/// Every h is tried up to kFullAssociativityLimit edges, else h in {a, b}.
bool translations_commute(const Dessin& d);

/// The dessin of (G; b, a), built from the swapped pair.
Dessin reciprocal_dessin(const Dessin& d);

/// m = n and phi = phi_star.
bool is_symmetric_dessin(const Dessin& d);

Dessin standard_dessin(std::int32_t m, std::int32_t n);

/// One line per vertex, black first: "B<i>: e e ...", then "W<y>: e e ...",
/// edges in rotation order.
std::string rotation_system(const Dessin& d);

struct DessinClassification {
  std::int32_t m = 0;
  std::int32_t n = 0;
  /// Isomorphism classes, one per reciprocal pair.
  std::int32_t total = 0;
  /// Classes identified under colour swap: swap orbits when m = n, else the
  /// number of (m, n) classes matched to an (n, m) class.
  std::int32_t up_to_reciprocity = 0;
  std::int32_t symmetric = 0;
  std::int32_t abelian = 0;
  /// genus -> number of classes.
  std::map<std::int32_t, std::int32_t> genus_spectrum;
};

/// Builds one dessin per pair. `pairs` must be the (m, n) list and
/// `swapped_pairs` the (n, m) list; throws SelfCheckFailure if the swap does
/// not match them one to one.
DessinClassification classify_dessins(const std::vector<ReciprocalPair>& pairs,
                                      const std::vector<ReciprocalPair>& swapped_pairs, unsigned jobs = 1,
                                      std::uint64_t seed = 0);

DessinClassification classify_dessins(std::int32_t m, std::int32_t n, unsigned jobs = 1, std::uint64_t seed = 0);

}  // namespace skewmorph
