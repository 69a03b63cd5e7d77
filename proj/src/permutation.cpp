#include "skewmorph/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skewmorph/kernels.hpp"
#include "skewmorph/zmod.hpp"

namespace skewmorph {

Permutation::Permutation(std::vector<std::int32_t> image) : image_(std::move(image)) {
  if (image_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(image_.size(), false);
  for (std::int32_t v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("image table is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::int32_t degree) {
  if (degree <= 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<std::int32_t> image(static_cast<std::size_t>(degree));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image), Unchecked{});
}

Permutation Permutation::from_cycles(std::int32_t degree, const std::vector<Cycle>& cycles) {
  std::vector<std::int32_t> image = identity(degree).image_;
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= degree) throw std::invalid_argument("cycle point out of range");
      image[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<std::int32_t>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::int32_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<std::int32_t>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  for (const Cycle& c : orbits(*this)) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  }
  std::vector<std::int32_t> out(p.image_.size());
  kernels::gather(q.image_, p.image_, out);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::int64_t order(const Permutation& p) {
  std::int64_t result = 1;
  for (const Cycle& c : orbits(p)) result = checked_lcm(result, static_cast<std::int64_t>(c.size()));
  return result;
}

Permutation power(const Permutation& p, std::int64_t k) {
  return Permutation(CycleIndex(p).power_table(k), Permutation::Unchecked{});
}

std::vector<Cycle> orbits(const Permutation& p) {
  std::vector<Cycle> result;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (std::int32_t start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Cycle c;
    for (std::int32_t i = start; !seen[static_cast<std::size_t>(i)]; i = p(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      c.push_back(i);
    }
    result.push_back(std::move(c));
  }
  return result;
}

CycleIndex::CycleIndex(const Permutation& p)
    : cycles_(orbits(p)),
      cycle_id_(static_cast<std::size_t>(p.degree())),
      position_(static_cast<std::size_t>(p.degree())),
      order_(1) {
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    order_ = checked_lcm(order_, static_cast<std::int64_t>(cycles_[c].size()));
    for (std::size_t i = 0; i < cycles_[c].size(); ++i) {
      auto pt = static_cast<std::size_t>(cycles_[c][i]);
      cycle_id_[pt] = static_cast<std::int32_t>(c);
      position_[pt] = static_cast<std::int32_t>(i);
    }
  }
}

std::int32_t CycleIndex::apply_power(std::int32_t i, std::int64_t k) const {
  const Cycle& c = cycles_[static_cast<std::size_t>(cycle_id_[static_cast<std::size_t>(i)])];
  auto len = static_cast<std::int64_t>(c.size());
  return c[static_cast<std::size_t>(normalize(position_[static_cast<std::size_t>(i)] + normalize(k, len), len))];
}

std::vector<std::int32_t> CycleIndex::power_table(std::int64_t k) const {
  std::vector<std::int32_t> out(cycle_id_.size());
  for (const Cycle& c : cycles_) {
    auto len = static_cast<std::int64_t>(c.size());
    auto shift = static_cast<std::size_t>(normalize(k, len));
    for (std::size_t i = 0; i < c.size(); ++i) {
      out[static_cast<std::size_t>(c[i])] = c[(i + shift) % c.size()];
    }
  }
  return out;
}

}  // namespace skewmorph
