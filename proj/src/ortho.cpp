#include "orthokit/ortho.hpp"

#include <string>

#include "orthokit/errors.hpp"
#include "orthokit/simd.hpp"

namespace orthokit {

bool is_permutation(std::span<const Elem> values, std::uint32_t q) {
    if (values.size() != q) return false;
    std::vector<std::uint64_t> seen((q + 63) / 64, 0);
    for (Elem v : values) {
        if (v >= q) return false;
        std::uint64_t& word = seen[v >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (word & bit) return false;
        word |= bit;
    }
    return true;
}

bool is_permutation(const MapTable& t) {
    return is_permutation(t.values(), t.field().q());
}

std::vector<Elem> difference_values(const MapTable& t) {
    const Field& f = t.field();
    std::vector<Elem> out(f.q());
    const auto& k = simd::active();
    if (f.p() == 2) {
        k.xor_identity(t.values().data(), out.data(), out.size());
    } else if (f.r() == 1) {
        k.sub_identity_mod_p(t.values().data(), out.data(), out.size(), f.p());
    } else {
        for (Elem x = 0; x < f.q(); ++x) out[x] = f.sub(t(x), x);
    }
    return out;
}

bool is_orthomorphism(const MapTable& t) {
    return is_permutation(t) && is_permutation(difference_values(t), t.field().q());
}

MapTable translate(const MapTable& t, Elem g) {
    const Field& f = t.field();
    if (!f.contains(g)) throw PreconditionError("translation element outside the field");
    const Elem base = t(g);
    return MapTable::from_function(t.field_ptr(), [&](Elem x) { return f.sub(t(f.add(x, g)), base); });
}

MapTable cyclotomic_map(FieldPtr field, std::uint32_t n, std::span<const Elem> coeffs) {
    const Field& f = *field;
    if (n == 0 || f.group_order() % n != 0) {
        throw PreconditionError("cyclotomic index " + std::to_string(n) + " does not divide q-1");
    }
    if (coeffs.size() != n) throw PreconditionError("cyclotomic map needs exactly n coefficients");
    for (Elem a : coeffs) {
        if (!f.contains(a)) throw PreconditionError("coefficient outside the field");
    }
    return MapTable::from_function(std::move(field), [&](Elem x) -> Elem {
        if (x == 0) return 0;
        return f.mul(coeffs[f.log(x) % n], x);
    });
}

CyclotomicProfile cyclotomic_profile(const MapTable& t) {
    const Field& f = t.field();
    CyclotomicProfile profile;
    if (t(0) != 0) return profile;
    const std::uint32_t order = f.group_order();
    // ratio[i] = t(gamma^i) / gamma^i
    std::vector<Elem> ratio(order);
    for (std::uint32_t i = 0; i < order; ++i) {
        const Elem x = f.exp(i);
        ratio[i] = f.div(t(x), x);
    }
    for (std::uint32_t n : f.group_order_divisors()) {
        if (n == order) break;
        bool constant = true;
        for (std::uint32_t i = n; i < order && constant; ++i) constant = ratio[i] == ratio[i - n];
        if (constant) {
            profile.min_index = n;
            profile.coeffs.assign(ratio.begin(), ratio.begin() + n);
            return profile;
        }
    }
    return profile;
}

bool is_irregular(const MapTable& t) {
    if (!is_orthomorphism(t)) throw PreconditionError("irregularity is only defined for orthomorphisms");
    for (Elem g = 0; g < t.field().q(); ++g) {
        if (cyclotomic_profile(translate(t, g)).cyclotomic()) return false;
    }
    return true;
}

} // namespace orthokit
