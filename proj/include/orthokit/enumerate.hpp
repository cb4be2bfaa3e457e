#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "orthokit/field.hpp"
#include "orthokit/map_table.hpp"

namespace orthokit {

/// Largest field order accepted by the exhaustive enumerator.
inline constexpr std::uint32_t kEnumerationCap = 13;
/// Largest field order accepted by census() (it compares all pairs).
inline constexpr std::uint32_t kCensusCap = 11;

using TableVisitor = std::function<void(std::span<const Elem>)>;

/// Calls `visit` once per orthomorphism of F_q, in lexicographic order of
/// (theta(0), theta(1), ...). With `fixed_at_one`, only orthomorphisms with
/// theta(1) equal to that value are produced.
void enumerate_orthomorphisms(const Field& field, const TableVisitor& visit,
                              std::optional<Elem> fixed_at_one = std::nullopt);

std::vector<MapTable> all_orthomorphisms(const FieldPtr& field);

struct CensusOptions {
    unsigned jobs = 1;
};

struct CensusReport {
    std::uint32_t q = 0;
    std::uint64_t total_count = 0;
    std::map<int, std::uint64_t> degree_histogram;
    /// Unset when there are fewer than two orthomorphisms.
    std::optional<std::uint32_t> min_pairwise_distance;
    std::uint64_t irregular_count = 0;
    /// floor(q^(q/2 + 2) / 2)
    std::uint64_t non_irregular_bound = 0;

    /// Highest degree in the histogram, unset when it is empty.
    std::optional<int> max_degree() const;
};

CensusReport census(const FieldPtr& field, const CensusOptions& options = {});

struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    bool operator==(const Fraction&) const = default;
};

/// irregular / total as a reduced fraction (0/1 when there are none).
/// Throws InternalError if the non-irregular count breaks the counting bound.
Fraction irregular_fraction(const CensusReport& report);
Fraction irregular_fraction(const FieldPtr& field, const CensusOptions& options = {});

/// floor(q^(q/2 + 2) / 2), computed exactly.
std::uint64_t non_irregular_bound(std::uint32_t q);

/// 4 * n^2 <= q^(q + 4), the square-free form of n <= q^(q/2 + 2) / 2.
bool within_counting_bound(std::uint32_t q, std::uint64_t non_irregular);

/// Minimum Hamming distance over all pairs of `tables` (each of length
/// q <= 16), using the active SIMD kernel. Unset for fewer than two tables.
std::optional<std::uint32_t> min_pairwise_distance(std::span<const MapTable> tables);

} // namespace orthokit
