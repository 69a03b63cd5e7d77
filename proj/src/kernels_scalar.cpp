#include "skewmorph/kernels.hpp"

namespace skewmorph::kernels::scalar {

void difference_row(const std::int32_t* table, std::int32_t n, std::int32_t x, std::int32_t* out) noexcept {
  const std::int32_t base = table[x];
  for (std::int32_t y = 0; y < n; ++y) {
    std::int32_t idx = x + y;
    if (idx >= n) idx -= n;
    std::int32_t d = table[idx] - base;
    out[y] = d < 0 ? d + n : d;
  }
}

bool rows_equal(const std::int32_t* a, const std::int32_t* b, std::size_t len) noexcept {
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

void gather(const std::int32_t* table, const std::int32_t* index, std::size_t len, std::int32_t* out) noexcept {
  for (std::size_t i = 0; i < len; ++i) out[i] = table[index[i]];
}

void add_mod(const std::int32_t* a, const std::int32_t* b, std::int32_t modulus, std::size_t len,
             std::int32_t* out) noexcept {
  for (std::size_t i = 0; i < len; ++i) {
    std::int32_t s = a[i] + b[i];
    out[i] = s >= modulus ? s - modulus : s;
  }
}

}  // namespace skewmorph::kernels::scalar
