#include "skewmorph/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace skewmorph::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(SKEWMORPH_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__)) && \
    (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* env = std::getenv("SKEWMORPH_ISA")) {
    if (std::string_view(env) == "scalar") return Isa::scalar;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  return isa == Isa::scalar || (isa == Isa::avx2 && cpu_has_avx2());
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("instruction set not supported here: " + std::string(isa_name(isa)));
  }
  current().store(isa, std::memory_order_relaxed);
}

void difference_row(std::span<const std::int32_t> table, std::int32_t x, std::span<std::int32_t> out) {
  require_same_size(table.size(), out.size(), "difference_row");
  const auto n = static_cast<std::int32_t>(table.size());
  if (x < 0 || x >= n) throw std::out_of_range("difference_row: x outside table");
  if (active_isa() == Isa::avx2) {
    avx2::difference_row(table.data(), n, x, out.data());
  } else {
    scalar::difference_row(table.data(), n, x, out.data());
  }
}

bool rows_equal(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  if (a.size() != b.size()) return false;
  return active_isa() == Isa::avx2 ? avx2::rows_equal(a.data(), b.data(), a.size())
                                   : scalar::rows_equal(a.data(), b.data(), a.size());
}

void gather(std::span<const std::int32_t> table, std::span<const std::int32_t> index,
            std::span<std::int32_t> out) {
  require_same_size(index.size(), out.size(), "gather");
  if (active_isa() == Isa::avx2) {
    avx2::gather(table.data(), index.data(), index.size(), out.data());
  } else {
    scalar::gather(table.data(), index.data(), index.size(), out.data());
  }
}

void add_mod(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::int32_t modulus,
             std::span<std::int32_t> out) {
  require_same_size(a.size(), b.size(), "add_mod");
  require_same_size(a.size(), out.size(), "add_mod");
  if (active_isa() == Isa::avx2) {
    avx2::add_mod(a.data(), b.data(), modulus, a.size(), out.data());
  } else {
    scalar::add_mod(a.data(), b.data(), modulus, a.size(), out.data());
  }
}

}  // namespace skewmorph::kernels
