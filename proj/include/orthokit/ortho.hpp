#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orthokit/field.hpp"
#include "orthokit/map_table.hpp"

namespace orthokit {

/// Smallest proper index at which a map is cyclotomic, with the coefficients
/// a_0..a_{n-1} that rebuild it.
struct CyclotomicProfile {
    std::optional<std::uint32_t> min_index;
    std::vector<Elem> coeffs;

    bool cyclotomic() const noexcept { return min_index.has_value(); }
};

/// True iff `values` (all < q) are pairwise distinct and there are q of them.
bool is_permutation(std::span<const Elem> values, std::uint32_t q);
bool is_permutation(const MapTable& t);

/// The table of x -> t(x) - x.
std::vector<Elem> difference_values(const MapTable& t);

bool is_orthomorphism(const MapTable& t);

/// x -> t(x + g) - t(g). Always fixes 0.
MapTable translate(const MapTable& t, Elem g);

/// 0 -> 0 and x -> a_i x on the coset C_{i,n}. Needs n | q-1 and n coefficients.
MapTable cyclotomic_map(FieldPtr field, std::uint32_t n, std::span<const Elem> coeffs);

/// Tests divisors n < q-1 of q-1 in increasing order; index q-1 never counts.
CyclotomicProfile cyclotomic_profile(const MapTable& t);

/// No translation of t is cyclotomic. Throws PreconditionError unless t is
/// an orthomorphism.
bool is_irregular(const MapTable& t);

} // namespace orthokit
