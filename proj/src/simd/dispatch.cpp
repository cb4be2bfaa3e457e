#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace orthokit::simd {

namespace {

bool cpu_has_avx2() {
#if defined(ORTHOKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

const Kernels& select() {
    const Kernels* best = &scalar_kernels();
    if (const Kernels* k = avx2_kernels()) best = k;
    if (const Kernels* k = neon_kernels()) best = k;
    if (const char* forced = std::getenv("ORTHOKIT_SIMD")) {
        const std::string_view want(forced);
        for (const Kernels* k : available_kernels()) {
            if (k->name == want) return *k;
        }
        return scalar_kernels();
    }
    return *best;
}

} // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{Isa::scalar, "scalar", &detail::count_mismatches_scalar,
                           &detail::min_row_distance_scalar, &detail::sub_identity_mod_p_scalar,
                           &detail::xor_identity_scalar};
    return k;
}

const Kernels* avx2_kernels() {
#if defined(ORTHOKIT_HAVE_AVX2)
    static const Kernels k{Isa::avx2, "avx2", &detail::count_mismatches_avx2,
                           &detail::min_row_distance_avx2, &detail::sub_identity_mod_p_avx2,
                           &detail::xor_identity_avx2};
    static const bool ok = cpu_has_avx2();
    return ok ? &k : nullptr;
#else
    return nullptr;
#endif
}

const Kernels* neon_kernels() {
#if defined(ORTHOKIT_HAVE_NEON)
    static const Kernels k{Isa::neon, "neon", &detail::count_mismatches_neon,
                           &detail::min_row_distance_neon, &detail::sub_identity_mod_p_neon,
                           &detail::xor_identity_neon};
    return &k;
#else
    return nullptr;
#endif
}

std::vector<const Kernels*> available_kernels() {
    std::vector<const Kernels*> out{&scalar_kernels()};
    if (const Kernels* k = avx2_kernels()) out.push_back(k);
    if (const Kernels* k = neon_kernels()) out.push_back(k);
    return out;
}

const Kernels& active() {
    static const Kernels& k = select();
    return k;
}

} // namespace orthokit::simd
