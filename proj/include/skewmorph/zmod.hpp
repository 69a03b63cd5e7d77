#pragma once

// Exact modular arithmetic and the handful of number-theoretic helpers the
// rest of the library leans on. Moduli in scope are small (<= 10^4), so
// everything is plain 64-bit integer arithmetic.

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace skewmorph {

/// Least nonnegative representative of `value` modulo `modulus`.
constexpr std::int64_t normalize(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

/// An element of Z_modulus. Arithmetic between residues of different moduli
/// throws std::invalid_argument.
class Residue {
 public:
  Residue(std::int64_t value, std::int32_t modulus);

  std::int32_t value() const noexcept { return value_; }
  std::int32_t modulus() const noexcept { return modulus_; }

  Residue operator+(const Residue& rhs) const;
  Residue operator-(const Residue& rhs) const;
  Residue operator*(const Residue& rhs) const;
  Residue operator-() const { return Residue(-static_cast<std::int64_t>(value_), modulus_); }

  bool operator==(const Residue&) const = default;

 private:
  void require_same_modulus(const Residue& rhs) const;

  std::int32_t value_;
  std::int32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// Euler's totient via trial-division factorization. Requires n >= 1.
std::int64_t euler_phi(std::int64_t n);

/// base^exp mod modulus for exp >= 0.
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t modulus);

/// Multiplicative order of r modulo n; r must be a unit (gcd(r, n) = 1).
/// By convention the order of anything modulo 1 is 1.
std::int64_t multiplicative_order(std::int64_t r, std::int64_t n);

/// Inverse of a unit r modulo n, or nullopt if gcd(r, n) != 1.
std::optional<std::int64_t> mod_inverse(std::int64_t r, std::int64_t n);

/// Least common multiple that throws std::overflow_error instead of wrapping.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

/// A congruence class k = residue (mod modulus).
struct Congruence {
  std::int64_t residue = 0;
  std::int64_t modulus = 1;
};

/// Merges two congruences with arbitrary (not necessarily coprime) moduli.
/// Returns nullopt when the system has no solution.
std::optional<Congruence> combine_congruences(Congruence a, Congruence b);

}  // namespace skewmorph
