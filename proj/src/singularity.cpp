#include "skewmorph/singularity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "skewmorph/bicyclic.hpp"
#include "skewmorph/errors.hpp"
#include "skewmorph/parallel.hpp"

namespace skewmorph {

bool is_singular(std::int32_t m, std::int32_t n) { return singularity_facts(m, n).singular; }

SingularityReport singularity_facts(std::int32_t m, std::int32_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  SingularityReport r;
  r.m = m;
  r.n = n;
  r.phi_n = euler_phi(n);
  r.phi_m = euler_phi(m);
  r.gcd_m_phin = std::gcd(static_cast<std::int64_t>(m), r.phi_n);
  r.gcd_n_phim = std::gcd(static_cast<std::int64_t>(n), r.phi_m);
  r.singular = r.gcd_m_phin == 1 && r.gcd_n_phim == 1;
  return r;
}

SingularityReport uniqueness_report(std::int32_t m, std::int32_t n, unsigned jobs, std::uint64_t seed) {
  return uniqueness_report(enumerate_reciprocal_pairs(m, n, jobs), m, n, jobs, seed);
}

SingularityReport uniqueness_report(const std::vector<ReciprocalPair>& pairs, std::int32_t m, std::int32_t n,
                                    unsigned jobs, std::uint64_t seed) {
  SingularityReport r = singularity_facts(m, n);
  for (const auto& p : pairs) {
    if (p.m() != m || p.n() != n) throw std::invalid_argument("uniqueness_report: pair with the wrong (m, n)");
  }
  const BicyclicTriple standard = triple_from_pair(
      *is_reciprocal_pair(*is_skew_morphism(n, Permutation::identity(n)), *is_skew_morphism(m, Permutation::identity(m))),
      seed);

  std::vector<char> abelian(pairs.size()), is_standard(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const BicyclicTriple t = triple_from_pair(pairs[i], seed);
    abelian[i] = is_abelian(t);
    is_standard[i] = triples_equivalent(t, standard);
  });
  r.pair_count = static_cast<std::int32_t>(pairs.size());
  r.all_abelian = std::all_of(abelian.begin(), abelian.end(), [](char c) { return c != 0; });
  r.all_standard = std::all_of(is_standard.begin(), is_standard.end(), [](char c) { return c != 0; });
  r.witness = nonabelian_witness_pair(m, n);

  const bool unique = *r.pair_count == 1;
  if (unique != r.singular || *r.all_abelian != r.singular || *r.all_standard != r.singular ||
      r.witness.has_value() == r.singular) {
    throw SelfCheckFailure("uniqueness equivalences fail at (" + std::to_string(m) + ", " + std::to_string(n) +
                           "): singular=" + std::to_string(r.singular) + " pairs=" + std::to_string(*r.pair_count) +
                           " all_abelian=" + std::to_string(*r.all_abelian) +
                           " all_standard=" + std::to_string(*r.all_standard));
  }
  return r;
}

}  // namespace skewmorph
