#pragma once

// Skew-morphisms of the cyclic group Z_n.
//
// A skew-morphism is a permutation phi of Z_n with phi(0) = 0 such that for
// every x there is an exponent pi(x) with
//
//     phi(x + y) = phi(x) + phi^{pi(x)}(y)   (mod n)   for all y.
//
// The exponent is unique modulo t = |phi|; SkewMorphism stores it reduced
// into [0, t). In particular the identity (t = 1) has pi == 0 everywhere.

#include <cstdint>
#include <optional>
#include <vector>

#include "skewmorph/permutation.hpp"
#include "skewmorph/zmod.hpp"

namespace skewmorph {

class SkewMorphism {
 public:
  std::int32_t modulus() const noexcept { return phi_.degree(); }
  const Permutation& phi() const noexcept { return phi_; }
  std::int32_t order() const noexcept { return order_; }
  /// Canonical power function, values in [0, order()).
  const std::vector<std::int32_t>& pi() const noexcept { return pi_; }

  /// phi(x) = x * phi(1) for all x.
  bool is_automorphism() const noexcept;

  bool operator==(const SkewMorphism& rhs) const { return phi_ == rhs.phi_; }
  auto operator<=>(const SkewMorphism& rhs) const { return phi_ <=> rhs.phi_; }

 private:
  SkewMorphism(Permutation phi, std::int32_t order, std::vector<std::int32_t> pi)
      : phi_(std::move(phi)), order_(order), pi_(std::move(pi)) {}

  friend std::optional<SkewMorphism> is_skew_morphism(std::int32_t n, const Permutation& p);

  Permutation phi_;
  std::int32_t order_;
  std::vector<std::int32_t> pi_;
};

/// Decides whether p is a skew-morphism of Z_n and, if so, packages it with
/// its order and canonical power function. Throws std::invalid_argument when
/// p.degree() != n.
std::optional<SkewMorphism> is_skew_morphism(std::int32_t n, const Permutation& p);

/// sigma(x, k) = sum_{i=1..k} pi(phi^{i-1}(x)) mod |phi|.
Residue sigma(const SkewMorphism& s, const Residue& x, std::int64_t k);

/// The automorphisms x -> r*x, gcd(r, n) = 1, sorted by r.
std::vector<SkewMorphism> automorphisms(std::int32_t n);

/// x -> r*x mod n as a skew-morphism. Throws if r is not a unit.
SkewMorphism multiplication_map(std::int32_t n, std::int64_t r);

struct EnumerationOptions {
  /// Worker threads for the backtracking search; 0 or 1 runs inline.
  unsigned jobs = 1;
};

/// Every skew-morphism of Z_n, sorted by image table.
///
/// A skew-morphism phi of order t has its power function fixed by a
/// skew-morphism psi of Z_t (pi(x) = -psi^{-x}(-1)), and t < n, so the
/// enumeration recurses on smaller moduli. For each candidate power function
/// it backtracks over the orbit of 1, extends to all of Z_n through
/// phi(x+1) = phi(x) + phi^{pi(x)}(1), and fully verifies each candidate.
std::vector<SkewMorphism> enumerate_skew_morphisms(std::int32_t n, const EnumerationOptions& options = {});

/// Largest n accepted by brute_force_skew_morphisms.
inline constexpr std::int32_t kBruteForceLimit = 9;

/// Independent oracle: filters all (n-1)! permutations fixing 0. Same order
/// as the enumerator. Throws std::invalid_argument for n > kBruteForceLimit.
std::vector<SkewMorphism> brute_force_skew_morphisms(std::int32_t n);

}  // namespace skewmorph
