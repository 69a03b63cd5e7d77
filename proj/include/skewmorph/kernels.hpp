#pragma once

// Row kernels over int32 image tables. These are the inner loops of
// skew-morphism verification (difference rows compared against power rows)
// and of bicyclic table construction (gather + modular add).
//
// Every kernel has a scalar reference implementation; an AVX2 variant is
// selected at runtime when the CPU supports it. Set SKEWMORPH_ISA=scalar in
// the environment, or call force_isa(), to pin the scalar path.

#include <cstdint>
#include <span>
#include <string_view>

namespace skewmorph::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when `isa` is compiled in and supported by the running CPU.
bool isa_supported(Isa isa) noexcept;

/// The variant every dispatching kernel below currently uses.
Isa active_isa() noexcept;

/// Pins the dispatch target. Throws std::invalid_argument for an unsupported isa.
void force_isa(Isa isa);

/// out[y] = (table[(x + y) mod n] - table[x]) mod n, n = table.size().
void difference_row(std::span<const std::int32_t> table, std::int32_t x, std::span<std::int32_t> out);

/// Elementwise equality of two rows of equal length.
bool rows_equal(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

/// out[i] = table[index[i]].
void gather(std::span<const std::int32_t> table, std::span<const std::int32_t> index,
            std::span<std::int32_t> out);

/// out[i] = (a[i] + b[i]) mod modulus for inputs already in [0, modulus).
void add_mod(std::span<const std::int32_t> a, std::span<const std::int32_t> b, std::int32_t modulus,
             std::span<std::int32_t> out);

// Direct entry points to each variant, used by the equivalence tests.
namespace scalar {
void difference_row(const std::int32_t* table, std::int32_t n, std::int32_t x, std::int32_t* out) noexcept;
bool rows_equal(const std::int32_t* a, const std::int32_t* b, std::size_t len) noexcept;
void gather(const std::int32_t* table, const std::int32_t* index, std::size_t len, std::int32_t* out) noexcept;
void add_mod(const std::int32_t* a, const std::int32_t* b, std::int32_t modulus, std::size_t len,
             std::int32_t* out) noexcept;
}  // namespace scalar

namespace avx2 {
void difference_row(const std::int32_t* table, std::int32_t n, std::int32_t x, std::int32_t* out) noexcept;
bool rows_equal(const std::int32_t* a, const std::int32_t* b, std::size_t len) noexcept;
void gather(const std::int32_t* table, const std::int32_t* index, std::size_t len, std::int32_t* out) noexcept;
void add_mod(const std::int32_t* a, const std::int32_t* b, std::int32_t modulus, std::size_t len,
             std::int32_t* out) noexcept;
}  // namespace avx2

}  // namespace skewmorph::kernels
