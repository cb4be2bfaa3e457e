#include "orthokit/poly.hpp"

#include "orthokit/errors.hpp"
#include "orthokit/simd.hpp"

namespace orthokit {

namespace {

void trim(std::vector<Elem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

ReducedPoly reduce(const Field& field, std::vector<Elem> coeffs) {
    const std::uint32_t q = field.q();
    for (Elem c : coeffs) {
        if (!field.contains(c)) throw PreconditionError("coefficient outside the field");
    }
    if (coeffs.size() > q) {
        std::vector<Elem> out(q, 0);
        for (std::size_t e = 0; e < coeffs.size(); ++e) {
            // x^e agrees with x^(((e-1) mod (q-1)) + 1) on all of F_q for e >= 1.
            const std::size_t target = e < q ? e : (e - 1) % (q - 1) + 1;
            out[target] = field.add(out[target], coeffs[e]);
        }
        coeffs = std::move(out);
    }
    trim(coeffs);
    return ReducedPoly{std::move(coeffs)};
}

Elem evaluate(const Field& field, const ReducedPoly& f, Elem x) {
    Elem acc = 0;
    for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = field.add(field.mul(acc, x), f.coeffs[i]);
    return acc;
}

MapTable tabulate(FieldPtr field, const ReducedPoly& f) {
    const Field& fd = *field;
    return MapTable::from_function(std::move(field), [&](Elem x) { return evaluate(fd, f, x); });
}

ReducedPoly interpolate(const MapTable& table) {
    const Field& field = table.field();
    const std::uint32_t q = field.q();
    std::vector<Elem> coeffs(q, 0);
    coeffs[0] = table(0);

    const std::uint32_t n = field.group_order();
    const auto exp = field.exp_table();
    // Nonzero samples t(gamma^i) as (i, log t(gamma^i)).
    std::vector<std::uint32_t> pos;
    std::vector<std::uint32_t> logs;
    Elem total = table(0);
    for (std::uint32_t i = 0; i < n; ++i) {
        const Elem v = table(exp[i]);
        total = field.add(total, v);
        if (v != 0) {
            pos.push_back(i);
            logs.push_back(field.log(v));
        }
    }

    for (std::uint32_t j = 1; j + 1 < q; ++j) {
        // sum_i t(gamma^i) * gamma^(-i j)
        Elem acc = 0;
        std::uint64_t wide = 0;
        for (std::size_t k = 0; k < pos.size(); ++k) {
            const std::uint64_t shift = std::uint64_t{pos[k]} * j % n;
            const std::uint32_t e = static_cast<std::uint32_t>(logs[k] >= shift ? logs[k] - shift
                                                                                 : logs[k] + n - shift);
            if (field.r() == 1) {
                wide += exp[e];
            } else {
                acc = field.add(acc, exp[e]);
            }
        }
        if (field.r() == 1) acc = static_cast<Elem>(wide % field.p());
        coeffs[j] = field.neg(acc);
    }
    coeffs[q - 1] = field.neg(total);
    trim(coeffs);
    return ReducedPoly{std::move(coeffs)};
}

int reduced_degree(const MapTable& table) {
    return interpolate(table).degree();
}

std::size_t hamming_distance(const MapTable& f, const MapTable& g) {
    if (!f.field().same_as(g.field())) throw PreconditionError("tables over different fields");
    return simd::active().count_mismatches(f.values().data(), g.values().data(), f.size());
}

} // namespace orthokit
