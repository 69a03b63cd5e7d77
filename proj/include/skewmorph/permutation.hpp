#pragma once

// Permutations of {0, ..., degree-1} stored as image tables.
//
// Composition convention (project-wide): compose(p, q) applies p first, then
// q, i.e. i -> q(p(i)). Powers and inverses are unaffected by the convention;
// anywhere a product "fg" of maps is written in function notation (apply g
// first), it is compose(g, f) here.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace skewmorph {

using Cycle = std::vector<std::int32_t>;

class Permutation {
 public:
  /// Validates that `image` is a bijection on {0, ..., image.size()-1}.
  /// Throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<std::int32_t> image);

  static Permutation identity(std::int32_t degree);

  /// Builds from disjoint cycles; unmentioned points are fixed.
  static Permutation from_cycles(std::int32_t degree, const std::vector<Cycle>& cycles);

  std::int32_t degree() const noexcept { return static_cast<std::int32_t>(image_.size()); }
  std::int32_t operator()(std::int32_t i) const { return image_[static_cast<std::size_t>(i)]; }
  std::span<const std::int32_t> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Cycle notation, e.g. "(0)(1 3 5 7)(2)(4)(6)". Fixed points included.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::int32_t> image, Unchecked) : image_(std::move(image)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation power(const Permutation& p, std::int64_t k);

  std::vector<std::int32_t> image_;
};

/// i -> q(p(i)). Throws std::invalid_argument on a degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Least k >= 1 with p^k = identity (lcm of cycle lengths).
/// Throws std::overflow_error if it does not fit in 64 bits.
std::int64_t order(const Permutation& p);

/// p^k; negative k goes through the inverse.
Permutation power(const Permutation& p, std::int64_t k);

/// Disjoint cycles covering every point, each starting from its smallest
/// element, sorted by that element.
std::vector<Cycle> orbits(const Permutation& p);

/// Precomputed cycle structure for O(1) evaluation of arbitrary powers.
class CycleIndex {
 public:
  explicit CycleIndex(const Permutation& p);

  /// p^k(i) for any integer k.
  std::int32_t apply_power(std::int32_t i, std::int64_t k) const;
  /// p^k as an image table.
  std::vector<std::int32_t> power_table(std::int64_t k) const;

  std::int64_t order() const noexcept { return order_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  std::int32_t cycle_of(std::int32_t i) const { return cycle_id_[static_cast<std::size_t>(i)]; }
  std::int32_t position_of(std::int32_t i) const { return position_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Cycle> cycles_;
  std::vector<std::int32_t> cycle_id_;
  std::vector<std::int32_t> position_;
  std::int64_t order_;
};

}  // namespace skewmorph
