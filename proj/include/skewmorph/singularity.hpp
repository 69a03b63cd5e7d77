#pragma once

// Singular pairs: gcd(m, phi(n)) = gcd(n, phi(m)) = 1. For exact bicyclic
// triples these are exactly the (m, n) with a single reciprocal pair, whose
// group is Z_m x Z_n. The report checks that equivalence at one instance; it
// says nothing about non-exact products.

#include <cstdint>
#include <optional>
#include <vector>

#include "skewmorph/reciprocal.hpp"

namespace skewmorph {

bool is_singular(std::int32_t m, std::int32_t n);

struct SingularityReport {
  std::int32_t m = 0;
  std::int32_t n = 0;
  std::int64_t phi_n = 0;
  std::int64_t phi_m = 0;
  std::int64_t gcd_m_phin = 0;
  std::int64_t gcd_n_phim = 0;
  bool singular = false;
  // filled once the pairs have been enumerated
  std::optional<std::int32_t> pair_count;
  std::optional<bool> all_abelian;
  /// Every triple is equivalent to the direct-product triple.
  std::optional<bool> all_standard;
  std::optional<ReciprocalPair> witness;
};

/// Number-theoretic fields only.
SingularityReport singularity_facts(std::int32_t m, std::int32_t n);

/// Enumerates the pairs, builds every triple, and fills the remaining fields.
/// Throws SelfCheckFailure unless singular, pair_count == 1, all_abelian and
/// all_standard agree, and a witness exists exactly when non-singular.
SingularityReport uniqueness_report(std::int32_t m, std::int32_t n, unsigned jobs = 1, std::uint64_t seed = 0);

/// Same, over a pre-enumerated (m, n) list.
SingularityReport uniqueness_report(const std::vector<ReciprocalPair>& pairs, std::int32_t m, std::int32_t n,
                                    unsigned jobs = 1, std::uint64_t seed = 0);

}  // namespace skewmorph
