#pragma once

#include "orthokit/simd.hpp"

namespace orthokit::simd::detail {

std::size_t count_mismatches_scalar(const Elem* a, const Elem* b, std::size_t n);
std::uint32_t min_row_distance_scalar(const std::uint8_t* probe, const std::uint8_t* rows,
                                      std::size_t count);
void sub_identity_mod_p_scalar(const Elem* t, Elem* out, std::size_t n, std::uint32_t p);
void xor_identity_scalar(const Elem* t, Elem* out, std::size_t n);

#if defined(ORTHOKIT_HAVE_AVX2)
std::size_t count_mismatches_avx2(const Elem* a, const Elem* b, std::size_t n);
std::uint32_t min_row_distance_avx2(const std::uint8_t* probe, const std::uint8_t* rows,
                                    std::size_t count);
void sub_identity_mod_p_avx2(const Elem* t, Elem* out, std::size_t n, std::uint32_t p);
void xor_identity_avx2(const Elem* t, Elem* out, std::size_t n);
#endif

#if defined(ORTHOKIT_HAVE_NEON)
std::size_t count_mismatches_neon(const Elem* a, const Elem* b, std::size_t n);
std::uint32_t min_row_distance_neon(const std::uint8_t* probe, const std::uint8_t* rows,
                                    std::size_t count);
void sub_identity_mod_p_neon(const Elem* t, Elem* out, std::size_t n, std::uint32_t p);
void xor_identity_neon(const Elem* t, Elem* out, std::size_t n);
#endif

} // namespace orthokit::simd::detail
