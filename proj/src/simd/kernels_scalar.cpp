#include "kernels_impl.hpp"

namespace orthokit::simd::detail {

std::size_t count_mismatches_scalar(const Elem* a, const Elem* b, std::size_t n) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += a[i] != b[i];
    return count;
}

std::uint32_t min_row_distance_scalar(const std::uint8_t* probe, const std::uint8_t* rows,
                                      std::size_t count) {
    std::uint32_t best = kNoRows;
    for (std::size_t r = 0; r < count; ++r) {
        const std::uint8_t* row = rows + r * kPackedRowBytes;
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < kPackedRowBytes; ++i) d += probe[i] != row[i];
        if (d < best) best = d;
    }
    return best;
}

void sub_identity_mod_p_scalar(const Elem* t, Elem* out, std::size_t n, std::uint32_t p) {
    for (std::size_t x = 0; x < n; ++x) {
        const auto xi = static_cast<Elem>(x);
        out[x] = t[x] >= xi ? t[x] - xi : t[x] + p - xi;
    }
}

void xor_identity_scalar(const Elem* t, Elem* out, std::size_t n) {
    for (std::size_t x = 0; x < n; ++x) out[x] = t[x] ^ static_cast<Elem>(x);
}

} // namespace orthokit::simd::detail
