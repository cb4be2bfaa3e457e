#include "kernels_impl.hpp"

#include <arm_neon.h>

namespace orthokit::simd::detail {

std::size_t count_mismatches_neon(const Elem* a, const Elem* b, std::size_t n) {
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const uint32x4_t eq = vceqq_u32(vld1q_u32(a + i), vld1q_u32(b + i));
        count += 4 - vaddvq_u32(vshrq_n_u32(eq, 31));
    }
    for (; i < n; ++i) count += a[i] != b[i];
    return count;
}

std::uint32_t min_row_distance_neon(const std::uint8_t* probe, const std::uint8_t* rows,
                                    std::size_t count) {
    std::uint32_t best = kNoRows;
    if (count == 0) return best;
    const uint8x16_t p = vld1q_u8(probe);
    for (std::size_t r = 0; r < count; ++r) {
        const uint8x16_t eq = vceqq_u8(vld1q_u8(rows + r * kPackedRowBytes), p);
        const std::uint32_t d = 16u - vaddvq_u8(vshrq_n_u8(eq, 7));
        best = d < best ? d : best;
    }
    return best;
}

void sub_identity_mod_p_neon(const Elem* t, Elem* out, std::size_t n, std::uint32_t p) {
    const uint32_t lanes[4] = {0, 1, 2, 3};
    uint32x4_t idx = vld1q_u32(lanes);
    const uint32x4_t step = vdupq_n_u32(4);
    const uint32x4_t vp = vdupq_n_u32(p);
    std::size_t x = 0;
    for (; x + 4 <= n; x += 4) {
        const uint32x4_t v = vld1q_u32(t + x);
        const uint32x4_t borrow = vcltq_u32(v, idx);
        const uint32x4_t d = vaddq_u32(vsubq_u32(v, idx), vandq_u32(vp, borrow));
        vst1q_u32(out + x, d);
        idx = vaddq_u32(idx, step);
    }
    for (; x < n; ++x) {
        const auto xi = static_cast<Elem>(x);
        out[x] = t[x] >= xi ? t[x] - xi : t[x] + p - xi;
    }
}

void xor_identity_neon(const Elem* t, Elem* out, std::size_t n) {
    const uint32_t lanes[4] = {0, 1, 2, 3};
    uint32x4_t idx = vld1q_u32(lanes);
    const uint32x4_t step = vdupq_n_u32(4);
    std::size_t x = 0;
    for (; x + 4 <= n; x += 4) {
        vst1q_u32(out + x, veorq_u32(vld1q_u32(t + x), idx));
        idx = vaddq_u32(idx, step);
    }
    for (; x < n; ++x) out[x] = t[x] ^ static_cast<Elem>(x);
}

} // namespace orthokit::simd::detail
