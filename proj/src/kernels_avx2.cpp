// AVX2 variants of the row kernels. This translation unit is compiled with
// -mavx2; nothing in it may run unless isa_supported(Isa::avx2) is true.

#include "skewmorph/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace skewmorph::kernels::avx2 {

#if defined(__AVX2__)

namespace {

// (v < 0) ? v + n : v, lanewise
inline __m256i wrap_negative(__m256i v, __m256i n) {
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), v);
  return _mm256_add_epi32(v, _mm256_and_si256(neg, n));
}

// (v >= n) ? v - n : v, lanewise, for v in [0, 2n)
inline __m256i wrap_overflow(__m256i v, __m256i n) {
  __m256i ge = _mm256_cmpgt_epi32(v, _mm256_sub_epi32(n, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(v, _mm256_and_si256(ge, n));
}

// out[i] = (src[i] - base) mod n over a contiguous run
inline void subtract_run(const std::int32_t* src, std::int32_t count, std::int32_t base, std::int32_t n,
                         std::int32_t* out) {
  const __m256i vbase = _mm256_set1_epi32(base);
  const __m256i vn = _mm256_set1_epi32(n);
  std::int32_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    v = wrap_negative(_mm256_sub_epi32(v, vbase), vn);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < count; ++i) {
    std::int32_t d = src[i] - base;
    out[i] = d < 0 ? d + n : d;
  }
}

}  // namespace

void difference_row(const std::int32_t* table, std::int32_t n, std::int32_t x, std::int32_t* out) noexcept {
  // y in [0, n - x) reads table[x + y]; the tail wraps to table[0 ..].
  const std::int32_t base = table[x];
  subtract_run(table + x, n - x, base, n, out);
  subtract_run(table, x, base, n, out + (n - x));
}

bool rows_equal(const std::int32_t* a, const std::int32_t* b, std::size_t len) noexcept {
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(va, vb)) != -1) return false;
  }
  for (; i < len; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

void gather(const std::int32_t* table, const std::int32_t* index, std::size_t len, std::int32_t* out) noexcept {
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(index + i));
    __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(table), vi, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < len; ++i) out[i] = table[index[i]];
}

void add_mod(const std::int32_t* a, const std::int32_t* b, std::int32_t modulus, std::size_t len,
             std::int32_t* out) noexcept {
  const __m256i vn = _mm256_set1_epi32(modulus);
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), wrap_overflow(_mm256_add_epi32(va, vb), vn));
  }
  for (; i < len; ++i) {
    std::int32_t s = a[i] + b[i];
    out[i] = s >= modulus ? s - modulus : s;
  }
}

#else  // no AVX2 toolchain support: forward to scalar so the symbols exist

void difference_row(const std::int32_t* table, std::int32_t n, std::int32_t x, std::int32_t* out) noexcept {
  scalar::difference_row(table, n, x, out);
}
bool rows_equal(const std::int32_t* a, const std::int32_t* b, std::size_t len) noexcept {
  return scalar::rows_equal(a, b, len);
}
void gather(const std::int32_t* table, const std::int32_t* index, std::size_t len, std::int32_t* out) noexcept {
  scalar::gather(table, index, len, out);
}
void add_mod(const std::int32_t* a, const std::int32_t* b, std::int32_t modulus, std::size_t len,
             std::int32_t* out) noexcept {
  scalar::add_mod(a, b, modulus, len, out);
}

#endif

}  // namespace skewmorph::kernels::avx2
