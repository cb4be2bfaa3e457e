#include "orthokit/bitrade.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "orthokit/errors.hpp"
#include "orthokit/ortho.hpp"
#include "orthokit/poly.hpp"

namespace orthokit {

namespace {

Elem coord(const Triple& t, int i) {
    return i == 0 ? t.row : (i == 1 ? t.col : t.sym);
}

std::vector<std::pair<Elem, Elem>> projection(const std::vector<Triple>& set, int a, int b) {
    std::vector<std::pair<Elem, Elem>> out;
    out.reserve(set.size());
    for (const Triple& t : set) out.emplace_back(coord(t, a), coord(t, b));
    std::sort(out.begin(), out.end());
    return out;
}

bool every_value_k_times(const std::vector<Triple>& set, int axis, std::uint32_t q, std::size_t k) {
    std::vector<std::size_t> count(q, 0);
    for (const Triple& t : set) {
        const Elem v = coord(t, axis);
        if (v >= q) return false;
        ++count[v];
    }
    return std::all_of(count.begin(), count.end(), [k](std::size_t c) { return c == k; });
}

} // namespace

Bitrade build_bitrade(const MapTable& f, const MapTable& g) {
    if (!f.field().same_as(g.field())) throw PreconditionError("bitrade maps live over different fields");
    if (!is_orthomorphism(f) || !is_orthomorphism(g)) throw PreconditionError("bitrade needs two orthomorphisms");
    if (f == g) throw PreconditionError("bitrade needs distinct orthomorphisms");

    const Field& field = f.field();
    Bitrade out;
    out.q = field.q();
    out.k = hamming_distance(f, g);
    for (Elem j = 0; j < field.q(); ++j) {
        if (f(j) == g(j)) continue;
        const Elem df = field.sub(f(j), j);
        const Elem dg = field.sub(g(j), j);
        for (Elem i = 0; i < field.q(); ++i) {
            out.l1.push_back({i, field.add(df, i), field.add(f(j), i)});
            out.l2.push_back({i, field.add(dg, i), field.add(g(j), i)});
        }
    }
    std::sort(out.l1.begin(), out.l1.end());
    std::sort(out.l2.begin(), out.l2.end());
    return out;
}

bool validate_homogeneous(const Bitrade& b) {
    if (b.k == 0 || b.q == 0) return false;
    if (b.l1.size() != b.k * b.q || b.l2.size() != b.k * b.q) return false;

    constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [x, y] : kPairs) {
        const auto p1 = projection(b.l1, x, y);
        if (std::adjacent_find(p1.begin(), p1.end()) != p1.end()) return false;
        if (p1 != projection(b.l2, x, y)) return false;
    }
    for (int axis = 0; axis < 3; ++axis) {
        if (!every_value_k_times(b.l1, axis, b.q, b.k)) return false;
        if (!every_value_k_times(b.l2, axis, b.q, b.k)) return false;
    }

    std::vector<Triple> s1 = b.l1, s2 = b.l2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    std::vector<Triple> common;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(common));
    return common.empty();
}

} // namespace orthokit
