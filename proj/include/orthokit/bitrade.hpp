#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "orthokit/field.hpp"
#include "orthokit/map_table.hpp"

namespace orthokit {

struct Triple {
    Elem row = 0;
    Elem col = 0;
    Elem sym = 0;

    auto operator<=>(const Triple&) const = default;
};

/// Two triple sets, each sorted lexicographically. k is derived from the
/// generating pair, never supplied.
struct Bitrade {
    std::vector<Triple> l1;
    std::vector<Triple> l2;
    std::size_t k = 0;
    std::uint32_t q = 0;
};

/// L1 = {(i, f(j) - j + i, f(j) + i)} and L2 likewise with g, over all i and
/// all j where f(j) != g(j). Requires f != g, both orthomorphisms.
Bitrade build_bitrade(const MapTable& f, const MapTable& g);

/// k-homogeneous Latin bitrade check: each coordinate-pair projection of L1
/// is injective with the same image as for L2, each single coordinate takes
/// every value exactly k times in both sets, and L1 and L2 are disjoint.
bool validate_homogeneous(const Bitrade& b);

} // namespace orthokit
