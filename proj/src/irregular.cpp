#include "orthokit/irregular.hpp"

#include <optional>
#include <random>

#include "orthokit/enumerate.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/ortho.hpp"
#include "orthokit/poly.hpp"

namespace orthokit {

namespace {

constexpr int kRandomCompletionTries = 64;

} // namespace

IrregularWitness irregular_theta_a(const FieldPtr& field) {
    const Field& f = *field;
    if (f.p() != 2 || f.r() < 3) throw PreconditionError("theta_a needs q = 2^r with r >= 3");
    for (Elem a = 2; a < f.q(); ++a) {
        const Elem a1 = f.add(a, 1);
        Elem c = 2;
        while (c == a || c == a1) ++c;
        MapTable theta = even_char_theta(field, a, c);
        if (is_irregular(theta)) return {std::move(theta), "THETA_A"};
    }
    throw InternalError("no irregular theta_a found");
}

IrregularWitness find_irregular(const FieldPtr& field, const CompletionOptions& options) {
    const Field& f = *field;
    const std::uint32_t q = f.q();
    if (f.p() == 2 && f.r() >= 3) return irregular_theta_a(field);
    if (q % 2 == 1 && q > 7 && q % 3 != 1) {
        MapTable t = tabulate(field, max_degree_orthomorphism(field, options));
        check_internal(is_irregular(t), "degree q-3 orthomorphism has a cyclotomic translate");
        return {std::move(t), "MAX_DEGREE"};
    }
    if (q <= kEnumerationCap) {
        std::optional<MapTable> hit;
        enumerate_orthomorphisms(f, [&](std::span<const Elem> values) {
            if (hit) return;
            MapTable t(field, std::vector<Elem>(values.begin(), values.end()));
            if (is_irregular(t)) hit = std::move(t);
        });
        if (!hit) throw NonexistenceError("no irregular orthomorphism exists over F_" + std::to_string(q));
        return {std::move(*hit), "ENUMERATION"};
    }
    // Odd q = 1 mod 3 beyond the enumeration cap.
    std::mt19937_64 rng(options.seed);
    for (int attempt = 0; attempt < kRandomCompletionTries; ++attempt) {
        const Elem z = 2 + static_cast<Elem>(rng() % (q - 2));
        const Elem k = 2 + static_cast<Elem>(rng() % (q - 2));
        const Elem e = 1 + static_cast<Elem>(rng() % (q - 1));
        if (e == z || e == k || e == f.sub(f.add(k, z), 1)) continue;
        try {
            MapTable t = complete_partial(field, z, k, e, options);
            if (is_irregular(t)) return {std::move(t), "RANDOM_COMPLETION"};
        } catch (const SearchExhausted&) {
        }
    }
    throw SearchExhausted("no irregular orthomorphism found among random completions", false);
}

} // namespace orthokit
