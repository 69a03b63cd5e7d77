#pragma once

// Reciprocal pairs: a skew-morphism phi of Z_n and phi_star of Z_m such that
//
//   (i)  |phi| divides m and |phi_star| divides n, and
//   (ii) pi(x)  = -phi_star^{-x}(-1)  (mod m) is a power function of phi,
//        pi*(y) = -phi^{-y}(-1)       (mod n) is a power function of phi_star.
//
// The two tables are kept in this extended form (codomains Z_m and Z_n)
// because they are the exponents of the group generators. The mirror variant
// uses pi(x) = phi_star^{x}(1) and pi*(y) = phi^{y}(1) instead; it describes
// the same pairs seen through the generators a^-1, b^-1.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "skewmorph/skew.hpp"

namespace skewmorph {

enum class PairConvention { standard, mirror };

/// I: both components automorphisms. II: exactly one. other: neither.
enum class PairType { type_i, type_ii, other };

std::string_view type_label(PairType type) noexcept;

class ReciprocalPair {
 public:
  std::int32_t m() const noexcept { return phi_star_.modulus(); }
  std::int32_t n() const noexcept { return phi_.modulus(); }
  const SkewMorphism& phi() const noexcept { return phi_; }
  const SkewMorphism& phi_star() const noexcept { return phi_star_; }
  /// Z_n -> Z_m.
  const std::vector<std::int32_t>& pi_ext() const noexcept { return pi_ext_; }
  /// Z_m -> Z_n.
  const std::vector<std::int32_t>& pi_star_ext() const noexcept { return pi_star_ext_; }
  PairConvention convention() const noexcept { return convention_; }
  PairType type() const noexcept;

  bool operator==(const ReciprocalPair& rhs) const {
    return convention_ == rhs.convention_ && phi_ == rhs.phi_ && phi_star_ == rhs.phi_star_;
  }

 private:
  ReciprocalPair(SkewMorphism phi, SkewMorphism phi_star, std::vector<std::int32_t> pi_ext,
                 std::vector<std::int32_t> pi_star_ext, PairConvention convention)
      : phi_(std::move(phi)),
        phi_star_(std::move(phi_star)),
        pi_ext_(std::move(pi_ext)),
        pi_star_ext_(std::move(pi_star_ext)),
        convention_(convention) {}

  friend std::optional<ReciprocalPair> make_pair(const SkewMorphism&, const SkewMorphism&, PairConvention);

  SkewMorphism phi_;
  SkewMorphism phi_star_;
  std::vector<std::int32_t> pi_ext_;
  std::vector<std::int32_t> pi_star_ext_;
  PairConvention convention_;
};

/// x -> -phi_star^{-x}(-1) mod m for x in Z_n (m = phi_star.modulus()).
std::vector<std::int32_t> extended_pi(const SkewMorphism& phi_star, std::int32_t n);

/// x -> phi_star^{x}(1) mod m for x in Z_n.
std::vector<std::int32_t> mirror_pi(const SkewMorphism& phi_star, std::int32_t n);

/// True when phi(x + y) = phi(x) + phi^{table[x]}(y) for all x, y.
/// Throws std::invalid_argument if table.size() != phi.modulus().
bool satisfies_power_identity(const SkewMorphism& phi, std::span<const std::int32_t> table);

/// The pair assembled under the given convention, or nullopt if it is not
/// reciprocal in that convention.
std::optional<ReciprocalPair> make_pair(const SkewMorphism& phi, const SkewMorphism& phi_star,
                                        PairConvention convention);

inline std::optional<ReciprocalPair> is_reciprocal_pair(const SkewMorphism& phi, const SkewMorphism& phi_star) {
  return make_pair(phi, phi_star, PairConvention::standard);
}

inline std::optional<ReciprocalPair> is_reciprocal_pair_mirror(const SkewMorphism& phi,
                                                               const SkewMorphism& phi_star) {
  return make_pair(phi, phi_star, PairConvention::mirror);
}

/// (phi_star, phi) as an (n, m) pair in the same convention. Throws
/// SelfCheckFailure if the swap is rejected.
ReciprocalPair swap_pair(const ReciprocalPair& pair);

/// All standard (m, n)-reciprocal pairs, phi on Z_n and phi_star on Z_m,
/// sorted by (phi, phi_star).
std::vector<ReciprocalPair> enumerate_reciprocal_pairs(std::int32_t m, std::int32_t n, unsigned jobs = 1);

/// Same, over caller-supplied lists of skew-morphisms of Z_m and Z_n.
std::vector<ReciprocalPair> enumerate_reciprocal_pairs(const std::vector<SkewMorphism>& skew_m,
                                                       const std::vector<SkewMorphism>& skew_n, unsigned jobs = 1);

/// (phi, phi) is an (n, n)-reciprocal pair.
bool is_symmetric_skew(const SkewMorphism& phi);

/// For a unit r of Z_n with multiplicative order k: k divides n and
/// r = 1 (mod k). Throws std::invalid_argument if r is not a unit.
bool symmetric_automorphism_criterion(std::int32_t n, std::int64_t r);

/// phi(x) = sum_{i=1..x} pi*(phi_star^{-i}(-1))  (mod |phi_star|) for x in Z_n and
/// phi_star(y) = sum_{i=1..y} pi(phi^{-i}(-1))   (mod |phi|) for y in Z_m.
/// Requires a standard-convention pair.
bool check_corollary_identities(const ReciprocalPair& pair);

}  // namespace skewmorph
