#include "orthokit/construct.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "orthokit/errors.hpp"
#include "orthokit/ortho.hpp"

namespace orthokit {

namespace {

constexpr std::array<std::pair<Provenance, std::string_view>, 7> kProvenanceNames{{
    {Provenance::non25, "NON25"},
    {Provenance::one_mod3, "ONE_MOD3"},
    {Provenance::swap_large, "SWAP_LARGE"},
    {Provenance::odd_two, "ODD_TWO"},
    {Provenance::f125, "F125"},
    {Provenance::small_search, "SMALL_SEARCH"},
    {Provenance::prime3, "PRIME3"},
}};

OrthoPair make_verified(MapTable f, MapTable g, Provenance provenance) {
    OrthoPair pair{std::move(f), std::move(g), 0, provenance};
    pair.distance = hamming_distance(pair.f, pair.g);
    verify_pair(pair);
    return pair;
}

// Scans c = 2, 3, ... for an orthomorphism with theta(0) = 0, theta(1) = c,
// theta(c) = c - 1, then swaps at (b, c) = (1, c).
OrthoPair swap_completion_pair(const FieldPtr& field, Provenance provenance, const CompletionOptions& options) {
    const Field& f = *field;
    for (Elem c = 2; c < f.q(); ++c) {
        try {
            MapTable theta = complete_partial(field, c, c, f.sub(c, 1), options);
            MapTable phi = swap_distance3(theta, 1, c);
            return make_verified(std::move(theta), std::move(phi), provenance);
        } catch (const SearchExhausted&) {
            continue;
        }
    }
    throw SearchExhausted("no completion found for any c in F_" + std::to_string(f.q()), false);
}

MapTable rebind(const MapTable& t, FieldPtr field) {
    return MapTable(std::move(field), std::vector<Elem>(t.values().begin(), t.values().end()));
}

MapTable transport(const MapTable& t, const std::vector<Elem>& iso, FieldPtr to) {
    std::vector<Elem> values(t.size());
    for (Elem x = 0; x < t.size(); ++x) values[iso[x]] = iso[t(x)];
    return MapTable(std::move(to), std::move(values));
}

} // namespace

std::string_view provenance_name(Provenance p) noexcept {
    for (const auto& [value, name] : kProvenanceNames) {
        if (value == p) return name;
    }
    return "UNKNOWN";
}

std::optional<Provenance> parse_provenance(std::string_view name) noexcept {
    for (const auto& [value, n] : kProvenanceNames) {
        if (n == name) return value;
    }
    return std::nullopt;
}

void verify_pair(const OrthoPair& pair) {
    check_internal(is_orthomorphism(pair.f), "pair: f is not an orthomorphism");
    check_internal(is_orthomorphism(pair.g), "pair: g is not an orthomorphism");
    check_internal(pair.distance == hamming_distance(pair.f, pair.g), "pair: stored distance is stale");
    check_internal(pair.distance == 3, "pair: distance is not 3");
}

MapTable swap_distance3(const MapTable& theta, Elem b, Elem c) {
    const Field& f = theta.field();
    if (!f.contains(b) || !f.contains(c)) throw PreconditionError("swap: b or c outside the field");
    if (b == 0 || c == 0) throw PreconditionError("swap: b and c must be nonzero");
    if (b == c) throw PreconditionError("swap: b and c must be distinct");
    if (!is_orthomorphism(theta)) throw PreconditionError("swap: theta is not an orthomorphism");
    if (theta(0) != 0) throw PreconditionError("swap: theta(0) != 0");
    if (theta(b) != c) throw PreconditionError("swap: theta(b) != c");
    if (theta(c) != f.sub(c, b)) throw PreconditionError("swap: theta(c) != c - b");

    std::vector<Elem> values(theta.values().begin(), theta.values().end());
    values[0] = f.sub(c, b);
    values[c] = c;
    values[b] = 0;
    MapTable phi(theta.field_ptr(), std::move(values));
    check_internal(is_orthomorphism(phi), "swap produced a non-orthomorphism");
    check_internal(hamming_distance(theta, phi) == 3, "swap distance is not 3");
    return phi;
}

OrthoPair lift_subfield_pair(FieldPtr field, const MapTable& phi, const MapTable& theta) {
    const Field& f = *field;
    if (f.p() == 2 || f.p() == 5) throw PreconditionError("subfield lift needs p not in {2, 5}");
    if (f.r() < 2) throw PreconditionError("subfield lift needs r > 1");
    for (const MapTable* t : {&phi, &theta}) {
        if (t->field().r() != 1 || t->field().p() != f.p()) {
            throw PreconditionError("subfield lift inputs must be maps of the prime field F_p");
        }
        if (!is_orthomorphism(*t)) throw PreconditionError("subfield lift input is not an orthomorphism");
    }
    if (hamming_distance(phi, theta) != 3) throw PreconditionError("subfield lift inputs must be at distance 3");

    // Prime-subfield elements are exactly the codes below p.
    auto lift = [&](const MapTable& base) {
        return MapTable::from_function(field, [&](Elem x) { return x < f.p() ? base(x) : f.mul(2, x); });
    };
    return make_verified(lift(phi), lift(theta), Provenance::non25);
}

OrthoPair near_linear_pair(FieldPtr field) {
    const Field& f = *field;
    if (f.q() % 3 != 1) throw PreconditionError("near-linear pair needs q = 1 mod 3");
    const std::uint32_t k = f.group_order() / 3;
    const std::array<Elem, 3> subgroup{f.exp(0), f.exp(k), f.exp(2 * k)};

    // f agrees with a_1 x off the subgroup, so it is an orthomorphism iff
    // a_0 and a_1 (and a_0 - 1, a_1 - 1) scale the subgroup onto the same set.
    auto same_image = [&](Elem u, Elem v) {
        std::array<Elem, 3> su{}, sv{};
        for (std::size_t i = 0; i < 3; ++i) {
            su[i] = f.mul(u, subgroup[i]);
            sv[i] = f.mul(v, subgroup[i]);
        }
        std::sort(su.begin(), su.end());
        std::sort(sv.begin(), sv.end());
        return su == sv;
    };

    for (Elem a0 = 2; a0 < f.q(); ++a0) {
        for (Elem a1 = 2; a1 < f.q(); ++a1) {
            if (a1 == a0) continue;
            if (!same_image(a0, a1) || !same_image(f.sub(a0, 1), f.sub(a1, 1))) continue;
            std::vector<Elem> coeffs(k, a1);
            coeffs[0] = a0;
            MapTable near = cyclotomic_map(field, k, coeffs);
            MapTable lin = MapTable::linear(field, a1);
            return make_verified(std::move(near), std::move(lin), Provenance::one_mod3);
        }
    }
    throw InternalError("no near-linear orthomorphism found");
}

bool cubic_unique_root(const Field& field, Elem a, Elem b) {
    if (field.p() != 2 || field.q() <= 2) throw PreconditionError("cubic criterion needs even q > 2");
    if (!field.contains(a) || !field.contains(b)) throw PreconditionError("cubic coefficient outside the field");
    if (b == 0) throw PreconditionError("cubic criterion needs b != 0");
    const Elem arg = field.div(field.pow(a, 3), field.mul(b, b));
    return field.trace(arg) != field.trace(1);
}

MapTable even_char_theta(FieldPtr field, Elem a, Elem c) {
    const Field& f = *field;
    if (f.p() != 2 || f.r() < 3) throw PreconditionError("theta_a needs q = 2^r with r >= 3");
    if (!f.contains(a) || !f.contains(c)) throw PreconditionError("theta_a parameter outside the field");
    if (a == 0 || a == 1) throw PreconditionError("theta_a needs a not in {0, 1}");
    const std::array<Elem, 4> h{0, 1, a, f.add(a, 1)};
    if (std::find(h.begin(), h.end(), c) != h.end()) throw PreconditionError("theta_a needs c not in H");

    const Elem shift = f.mul(a, f.add(a, 1));
    // x in H + c  <=>  x + c in H
    MapTable theta = MapTable::from_function(field, [&](Elem x) {
        const Elem y = f.add(x, c);
        const bool in_coset = std::find(h.begin(), h.end(), y) != h.end();
        return in_coset ? f.add(f.mul(a, x), shift) : f.mul(a, x);
    });
    check_internal(theta(0) == 0, "theta_a(0) != 0");
    check_internal(is_orthomorphism(theta), "theta_a is not an orthomorphism");
    return theta;
}

OddTwoParameters odd_two_parameters(const Field& f) {
    if (f.p() != 2 || f.r() % 2 == 0 || f.r() < 5) {
        throw PreconditionError("odd-power construction needs q = 2^r with r odd and r >= 5");
    }
    OddTwoParameters out;
    for (Elem c = 1; c < f.q() && out.c == 0; ++c) {
        const Elem cubic = f.add(f.add(f.pow(c, 3), c), 1);
        if (cubic != 0 && f.trace(f.inv(f.pow(c, 3))) == 0) out.c = c;
    }
    check_internal(out.c != 0, "no admissible c");
    const Elem c = out.c;
    const Elem c1 = f.add(c, 1);

    // Tr((c^2 + c + 1)^3 c^-4) = 0, so x^3 + (c^2+c+1)x + c^2 has a root.
    const Elem probe = f.div(f.pow(f.add(f.mul(c, c), c1), 3), f.pow(c, 4));
    check_internal(f.trace(probe) == 0, "trace identity failed for the chosen c");

    bool found = false;
    for (Elem x = 0; x < f.q() && !found; ++x) {
        const Elem x2 = f.mul(x, x);
        const Elem value = f.add(f.add(f.mul(x2, x), f.mul(c1, x2)), f.add(f.mul(c, x), c));
        if (value == 0) {
            out.a = x;
            found = true;
        }
    }
    check_internal(found, "cubic x^3 + (c+1)x^2 + cx + c has no root");
    const Elem a = out.a;
    check_internal(a != 0 && a != 1 && a != c && a != c1, "root a lies in {0, 1, c, c+1}");
    out.b = f.div(c, a);
    return out;
}

OrthoPair pair_even_odd_power(FieldPtr field) {
    const Field& f = *field;
    const OddTwoParameters prm = odd_two_parameters(f);
    MapTable theta = even_char_theta(field, prm.a, prm.c);
    check_internal(theta(prm.b) == prm.c, "theta_a(b) != c");
    check_internal(theta(prm.c) == f.add(prm.c, prm.b), "theta_a(c) != c + b");
    MapTable phi = swap_distance3(theta, prm.b, prm.c);
    return make_verified(std::move(theta), std::move(phi), Provenance::odd_two);
}

FieldPtr f125_field() {
    return Field::build(5, 3, std::vector<Elem>{3, 3, 0, 1});
}

OrthoPair pair_f125() {
    FieldPtr field = f125_field();
    const Field& f = *field;
    const Elem y = 5;
    const Elem y2 = f.mul(y, y);
    const Elem a = y2;
    const Elem b = f.add(y2, 4);
    const Elem scale = f.inv(f.sub(a, b));
    const Elem lin = f.neg(f.mul(b, scale));
    MapTable theta = MapTable::from_function(field, [&](Elem x) {
        return f.add(f.mul(scale, f.pow(x, 5)), f.mul(lin, x));
    });
    const Elem y118 = f.pow(y, 118);
    check_internal(theta(0) == 0, "F125: f(0) != 0");
    check_internal(theta(y2) == y118, "F125: f(y^2) != y^118");
    check_internal(y118 == f.add(f.mul(4, y2), 3), "F125: y^118 != 4y^2 + 3");
    check_internal(theta(y118) == f.add(f.mul(3, y2), 3), "F125: f(y^118) != 3y^2 + 3");
    MapTable phi = swap_distance3(theta, y2, y118);
    return make_verified(std::move(theta), std::move(phi), Provenance::f125);
}

OrthoPair small_prime_pair(std::uint32_t p, const CompletionOptions& options) {
    if (!is_prime(p)) throw PreconditionError("small_prime_pair needs a prime");
    if (p == 2 || p == 5) throw NonexistenceError("no distance-3 pair over F_" + std::to_string(p));
    FieldPtr field = Field::build(p, 1);
    if (p == 3) {
        return make_verified(MapTable::linear(field, 2), MapTable::linear(field, 2, 1), Provenance::prime3);
    }
    if (p % 3 == 1) return near_linear_pair(field);
    return swap_completion_pair(field, Provenance::small_search, options);
}

std::optional<Provenance> dispatch_branch(std::uint32_t p, std::uint32_t r) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) q *= p;
    if (q == 2 || q == 5 || q == 8) return std::nullopt;
    if (p != 2 && p != 5) {
        if (r > 1) return Provenance::non25;
        if (p == 3) return Provenance::prime3;
        return p % 3 == 1 ? Provenance::one_mod3 : Provenance::small_search;
    }
    if (r % 2 == 0) return Provenance::one_mod3;
    if (p == 2) return Provenance::odd_two;
    if (q == 125) return Provenance::f125;
    return Provenance::swap_large;
}

OrthoPair distance3_pair(FieldPtr field, const CompletionOptions& options) {
    const Field& f = *field;
    const auto branch = dispatch_branch(f.p(), f.r());
    if (!branch) {
        throw NonexistenceError("nonexistence (q=" + std::to_string(f.q()) + ")");
    }
    OrthoPair pair = [&]() -> OrthoPair {
        switch (*branch) {
        case Provenance::prime3:
        case Provenance::one_mod3:
        case Provenance::small_search:
            if (f.r() == 1) {
                OrthoPair base = small_prime_pair(f.p(), options);
                return OrthoPair{rebind(base.f, field), rebind(base.g, field), base.distance, base.provenance};
            }
            return near_linear_pair(field);
        case Provenance::non25: {
            OrthoPair base = small_prime_pair(f.p(), options);
            return lift_subfield_pair(field, base.f, base.g);
        }
        case Provenance::odd_two:
            return pair_even_odd_power(field);
        case Provenance::f125: {
            OrthoPair base = pair_f125();
            if (base.f.field().same_as(f)) return OrthoPair{rebind(base.f, field), rebind(base.g, field), 3, base.provenance};
            const auto iso = field_isomorphism(base.f.field(), f);
            return OrthoPair{transport(base.f, iso, field), transport(base.g, iso, field), 3, base.provenance};
        }
        case Provenance::swap_large:
            return swap_completion_pair(field, Provenance::swap_large, options);
        }
        throw InternalError("unhandled construction branch");
    }();
    pair.distance = hamming_distance(pair.f, pair.g);
    verify_pair(pair);
    return pair;
}

ReducedPoly max_degree_orthomorphism(FieldPtr field, const CompletionOptions& options) {
    const std::uint32_t q = field->q();
    if (q == 3) throw PreconditionError("F_3 has no orthomorphism of degree q-3 (its maximum is 1)");
    OrthoPair pair = distance3_pair(field, options);
    ReducedPoly fp = interpolate(pair.f);
    ReducedPoly gp = interpolate(pair.g);
    const int target = static_cast<int>(q) - 3;
    check_internal(fp.degree() <= target && gp.degree() <= target, "orthomorphism above degree q-3");
    if (fp.degree() == target) return fp;
    check_internal(gp.degree() == target, "neither member of a distance-3 pair has degree q-3");
    return gp;
}

} // namespace orthokit
