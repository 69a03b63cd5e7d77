#include "skewmorph/zmod.hpp"

#include <limits>
#include <string>

namespace skewmorph {

Residue::Residue(std::int64_t value, std::int32_t modulus) : value_(0), modulus_(modulus) {
  if (modulus <= 0) {
    throw std::invalid_argument("residue modulus must be positive, got " + std::to_string(modulus));
  }
  value_ = static_cast<std::int32_t>(normalize(value, modulus));
}

void Residue::require_same_modulus(const Residue& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw std::invalid_argument("modulus mismatch: " + std::to_string(modulus_) + " vs " +
                                std::to_string(rhs.modulus_));
  }
}

Residue Residue::operator+(const Residue& rhs) const {
  require_same_modulus(rhs);
  return Residue(static_cast<std::int64_t>(value_) + rhs.value_, modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
  require_same_modulus(rhs);
  return Residue(static_cast<std::int64_t>(value_) - rhs.value_, modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
  require_same_modulus(rhs);
  return Residue(static_cast<std::int64_t>(value_) * rhs.value_, modulus_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus() << ")";
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t modulus) {
  if (exp < 0) throw std::invalid_argument("mod_pow requires a nonnegative exponent");
  std::int64_t result = normalize(1, modulus);
  base = normalize(base, modulus);
  while (exp > 0) {
    if (exp & 1) result = result * base % modulus;
    base = base * base % modulus;
    exp >>= 1;
  }
  return result;
}

std::int64_t multiplicative_order(std::int64_t r, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("multiplicative_order requires n >= 1");
  r = normalize(r, n);
  if (std::gcd(r, n) != 1) {
    throw std::invalid_argument(std::to_string(r) + " is not a unit modulo " + std::to_string(n));
  }
  if (n == 1) return 1;
  std::int64_t k = 1;
  for (std::int64_t acc = r; acc != 1; acc = acc * r % n) ++k;
  return k;
}

std::optional<std::int64_t> mod_inverse(std::int64_t r, std::int64_t n) {
  // extended Euclid on (r mod n, n)
  std::int64_t old_r = normalize(r, n), cur_r = n;
  std::int64_t old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    std::int64_t q = old_r / cur_r;
    std::int64_t tmp = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
  }
  if (old_r != 1 && n != 1) return std::nullopt;
  return normalize(old_s, n);
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t q = a / g;
  if (q != 0 && b > std::numeric_limits<std::int64_t>::max() / q) {
    throw std::overflow_error("lcm exceeds 64-bit range");
  }
  return q * b;
}

std::optional<Congruence> combine_congruences(Congruence a, Congruence b) {
  // k = a.residue + a.modulus * u must satisfy k = b.residue (mod b.modulus)
  std::int64_t g = std::gcd(a.modulus, b.modulus);
  std::int64_t diff = b.residue - a.residue;
  if (diff % g != 0) return std::nullopt;
  std::int64_t lcm = checked_lcm(a.modulus, b.modulus);
  std::int64_t m1 = a.modulus / g, m2 = b.modulus / g;
  std::int64_t u = 0;
  if (m2 > 1) {
    u = static_cast<std::int64_t>(static_cast<__int128>(normalize(diff / g, m2)) *
                                  *mod_inverse(m1, m2) % m2);
  }
  auto k = static_cast<__int128>(a.residue) + static_cast<__int128>(a.modulus) * u;
  return Congruence{static_cast<std::int64_t>(k % lcm), lcm};
}

}  // namespace skewmorph
