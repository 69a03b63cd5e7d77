#include "skewmorph/reciprocal.hpp"

#include <stdexcept>
#include <string>

#include "skewmorph/errors.hpp"
#include "skewmorph/kernels.hpp"
#include "skewmorph/parallel.hpp"

namespace skewmorph {

std::string_view type_label(PairType type) noexcept {
  switch (type) {
    case PairType::type_i:
      return "I";
    case PairType::type_ii:
      return "II";
    case PairType::other:
      break;
  }
  return "other";
}

PairType ReciprocalPair::type() const noexcept {
  const int autos = int{phi_.is_automorphism()} + int{phi_star_.is_automorphism()};
  return autos == 2 ? PairType::type_i : autos == 1 ? PairType::type_ii : PairType::other;
}

std::vector<std::int32_t> extended_pi(const SkewMorphism& phi_star, std::int32_t n) {
  if (n < 1) throw std::invalid_argument("extended_pi: n must be positive");
  const std::int32_t m = phi_star.modulus();
  const CycleIndex index(phi_star.phi());
  std::vector<std::int32_t> table(static_cast<std::size_t>(n));
  const std::int32_t minus_one = m - 1;
  for (std::int32_t x = 0; x < n; ++x) {
    const std::int32_t image = index.apply_power(minus_one, -static_cast<std::int64_t>(x));
    table[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(normalize(-image, m));
  }
  return table;
}

std::vector<std::int32_t> mirror_pi(const SkewMorphism& phi_star, std::int32_t n) {
  if (n < 1) throw std::invalid_argument("mirror_pi: n must be positive");
  const std::int32_t m = phi_star.modulus();
  const CycleIndex index(phi_star.phi());
  std::vector<std::int32_t> table(static_cast<std::size_t>(n));
  for (std::int32_t x = 0; x < n; ++x) table[static_cast<std::size_t>(x)] = index.apply_power(1 % m, x);
  return table;
}

bool satisfies_power_identity(const SkewMorphism& phi, std::span<const std::int32_t> table) {
  const std::int32_t n = phi.modulus();
  if (static_cast<std::int32_t>(table.size()) != n) {
    throw std::invalid_argument("power table has " + std::to_string(table.size()) + " entries, expected " +
                                std::to_string(n));
  }
  const CycleIndex index(phi.phi());
  const auto t = static_cast<std::int32_t>(index.order());
  std::vector<std::vector<std::int32_t>> powers(static_cast<std::size_t>(t));
  std::vector<std::int32_t> diff(static_cast<std::size_t>(n));
  for (std::int32_t x = 0; x < n; ++x) {
    const auto k = static_cast<std::size_t>(normalize(table[static_cast<std::size_t>(x)], t));
    if (powers[k].empty()) powers[k] = index.power_table(static_cast<std::int64_t>(k));
    kernels::difference_row(phi.phi().image(), x, diff);
    if (!kernels::rows_equal(powers[k], diff)) return false;
  }
  return true;
}

std::optional<ReciprocalPair> make_pair(const SkewMorphism& phi, const SkewMorphism& phi_star,
                                        PairConvention convention) {
  const std::int32_t m = phi_star.modulus();
  const std::int32_t n = phi.modulus();
  if (m % phi.order() != 0 || n % phi_star.order() != 0) return std::nullopt;
  const bool mirror = convention == PairConvention::mirror;
  auto pi = mirror ? mirror_pi(phi_star, n) : extended_pi(phi_star, n);
  if (!satisfies_power_identity(phi, pi)) return std::nullopt;
  auto pi_star = mirror ? mirror_pi(phi, m) : extended_pi(phi, m);
  if (!satisfies_power_identity(phi_star, pi_star)) return std::nullopt;
  return ReciprocalPair(phi, phi_star, std::move(pi), std::move(pi_star), convention);
}

ReciprocalPair swap_pair(const ReciprocalPair& pair) {
  auto swapped = make_pair(pair.phi_star(), pair.phi(), pair.convention());
  if (!swapped) throw SelfCheckFailure("the swap of a reciprocal pair was rejected");
  return *swapped;
}

std::vector<ReciprocalPair> enumerate_reciprocal_pairs(std::int32_t m, std::int32_t n, unsigned jobs) {
  if (m < 1 || n < 1) throw std::invalid_argument("enumerate_reciprocal_pairs: m and n must be positive");
  EnumerationOptions options;
  options.jobs = jobs;
  return enumerate_reciprocal_pairs(enumerate_skew_morphisms(m, options), enumerate_skew_morphisms(n, options),
                                    jobs);
}

std::vector<ReciprocalPair> enumerate_reciprocal_pairs(const std::vector<SkewMorphism>& skew_m,
                                                       const std::vector<SkewMorphism>& skew_n, unsigned jobs) {
  std::vector<std::vector<ReciprocalPair>> rows(skew_n.size());
  parallel_for(skew_n.size(), jobs, [&](std::size_t i) {
    const SkewMorphism& phi = skew_n[i];
    for (const SkewMorphism& phi_star : skew_m) {
      // condition (i) is cheap; the tables are only built for survivors
      if (phi_star.modulus() % phi.order() != 0 || phi.modulus() % phi_star.order() != 0) continue;
      if (auto pair = is_reciprocal_pair(phi, phi_star)) rows[i].push_back(std::move(*pair));
    }
  });
  std::vector<ReciprocalPair> result;
  for (auto& row : rows) {
    for (auto& pair : row) result.push_back(std::move(pair));
  }
  return result;
}

bool is_symmetric_skew(const SkewMorphism& phi) { return is_reciprocal_pair(phi, phi).has_value(); }

bool symmetric_automorphism_criterion(std::int32_t n, std::int64_t r) {
  if (n < 1) throw std::invalid_argument("symmetric_automorphism_criterion: n must be positive");
  if (std::gcd(normalize(r, n), static_cast<std::int64_t>(n)) != 1) {
    throw std::invalid_argument(std::to_string(r) + " is not a unit modulo " + std::to_string(n));
  }
  const std::int64_t k = multiplicative_order(r, n);
  return n % k == 0 && normalize(r - 1, k) == 0;
}

namespace {

// sum_{i=1..count} table[p^{-i}(-1)] mod modulus, for count = 0..limit-1.
std::vector<std::int64_t> inverse_orbit_sums(const SkewMorphism& p, std::span<const std::int32_t> table,
                                             std::int32_t limit, std::int64_t modulus) {
  const CycleIndex index(p.phi());
  const std::int32_t minus_one = p.modulus() - 1;
  std::vector<std::int64_t> sums(static_cast<std::size_t>(limit));
  std::int64_t acc = 0;
  for (std::int32_t count = 0; count < limit; ++count) {
    sums[static_cast<std::size_t>(count)] = acc;
    const std::int32_t point = index.apply_power(minus_one, -(static_cast<std::int64_t>(count) + 1));
    acc = normalize(acc + table[static_cast<std::size_t>(point)], modulus);
  }
  return sums;
}

}  // namespace

bool check_corollary_identities(const ReciprocalPair& pair) {
  if (pair.convention() != PairConvention::standard) {
    throw std::invalid_argument("check_corollary_identities: needs a standard-convention pair");
  }
  const std::int32_t m = pair.m(), n = pair.n();
  const std::int64_t order_phi = pair.phi().order(), order_star = pair.phi_star().order();

  const auto phi_sums = inverse_orbit_sums(pair.phi_star(), pair.pi_star_ext(), n, order_star);
  for (std::int32_t x = 0; x < n; ++x) {
    if (normalize(pair.phi().phi()(x), order_star) != phi_sums[static_cast<std::size_t>(x)]) return false;
  }
  const auto star_sums = inverse_orbit_sums(pair.phi(), pair.pi_ext(), m, order_phi);
  for (std::int32_t y = 0; y < m; ++y) {
    if (normalize(pair.phi_star().phi()(y), order_phi) != star_sums[static_cast<std::size_t>(y)]) return false;
  }
  return true;
}

}  // namespace skewmorph
