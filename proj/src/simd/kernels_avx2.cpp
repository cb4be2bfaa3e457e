// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace orthokit::simd::detail {

std::size_t count_mismatches_avx2(const Elem* a, const Elem* b, std::size_t n) {
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const auto eq = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
        count += 8 - static_cast<std::size_t>(_mm_popcnt_u32(eq));
    }
    for (; i < n; ++i) count += a[i] != b[i];
    return count;
}

std::uint32_t min_row_distance_avx2(const std::uint8_t* probe, const std::uint8_t* rows,
                                    std::size_t count) {
    std::uint32_t best = kNoRows;
    if (count == 0) return best;
    const __m128i p128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(probe));
    const __m256i p256 = _mm256_broadcastsi128_si256(p128);
    std::size_t r = 0;
    // Two rows per 256-bit compare.
    for (; r + 2 <= count; r += 2) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r * kPackedRowBytes));
        const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, p256)));
        const auto d0 = 16u - static_cast<std::uint32_t>(_mm_popcnt_u32(eq & 0xffffu));
        const auto d1 = 16u - static_cast<std::uint32_t>(_mm_popcnt_u32(eq >> 16));
        best = d0 < best ? d0 : best;
        best = d1 < best ? d1 : best;
    }
    if (r < count) {
        const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(rows + r * kPackedRowBytes));
        const auto eq = static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpeq_epi8(v, p128)));
        const auto d = 16u - static_cast<std::uint32_t>(_mm_popcnt_u32(eq));
        best = d < best ? d : best;
    }
    return best;
}

void sub_identity_mod_p_avx2(const Elem* t, Elem* out, std::size_t n, std::uint32_t p) {
    const __m256i step = _mm256_set1_epi32(8);
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i zero = _mm256_setzero_si256();
    __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    std::size_t x = 0;
    for (; x + 8 <= n; x += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + x));
        __m256i d = _mm256_sub_epi32(v, idx);
        d = _mm256_add_epi32(d, _mm256_and_si256(vp, _mm256_cmpgt_epi32(zero, d)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), d);
        idx = _mm256_add_epi32(idx, step);
    }
    for (; x < n; ++x) {
        const auto xi = static_cast<Elem>(x);
        out[x] = t[x] >= xi ? t[x] - xi : t[x] + p - xi;
    }
}

void xor_identity_avx2(const Elem* t, Elem* out, std::size_t n) {
    const __m256i step = _mm256_set1_epi32(8);
    __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    std::size_t x = 0;
    for (; x + 8 <= n; x += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + x));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), _mm256_xor_si256(v, idx));
        idx = _mm256_add_epi32(idx, step);
    }
    for (; x < n; ++x) out[x] = t[x] ^ static_cast<Elem>(x);
}

} // namespace orthokit::simd::detail
