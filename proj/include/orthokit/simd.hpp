#pragma once

// Data-parallel inner loops used by the map/census code. Every kernel has a
// scalar reference implementation; AVX2 (x86-64) and NEON (AArch64) variants
// are compiled when the target allows and selected at runtime. All variants
// must return bit-identical results.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "orthokit/field.hpp"

namespace orthokit::simd {

/// Width of one packed census row. Tables over F_q with q <= kPackedRowBytes
/// are stored as one byte per entry, zero padded.
inline constexpr std::size_t kPackedRowBytes = 16;

/// Returned by min_row_distance for an empty row set.
inline constexpr std::uint32_t kNoRows = 0xffffffffu;

enum class Isa { scalar, avx2, neon };

struct Kernels {
    Isa isa;
    std::string_view name;

    /// Number of i < n with a[i] != b[i].
    std::size_t (*count_mismatches)(const Elem* a, const Elem* b, std::size_t n);

    /// Minimum byte-mismatch count between `probe` and each of `count`
    /// consecutive kPackedRowBytes-wide rows. kNoRows when count == 0.
    std::uint32_t (*min_row_distance)(const std::uint8_t* probe, const std::uint8_t* rows,
                                      std::size_t count);

    /// out[x] = (t[x] - x) mod p for x < n, all t[x] < p. Prime fields.
    void (*sub_identity_mod_p)(const Elem* t, Elem* out, std::size_t n, std::uint32_t p);

    /// out[x] = t[x] ^ x. Characteristic-2 fields.
    void (*xor_identity)(const Elem* t, Elem* out, std::size_t n);
};

const Kernels& scalar_kernels();

/// Null when the variant is not compiled in or the CPU lacks the extension.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const Kernels*> available_kernels();

/// The best available variant, chosen once. Setting ORTHOKIT_SIMD to
/// "scalar", "avx2" or "neon" forces a variant (falling back to scalar if
/// it is unavailable).
const Kernels& active();

} // namespace orthokit::simd
