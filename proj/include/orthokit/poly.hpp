#pragma once

#include <cstddef>
#include <vector>

#include "orthokit/field.hpp"
#include "orthokit/map_table.hpp"

namespace orthokit {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = -1;

/// Coefficients of a reduced polynomial (degree < q), x^0 first, trailing
/// zeros trimmed.
struct ReducedPoly {
    std::vector<Elem> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const noexcept { return coeffs.empty(); }
    bool operator==(const ReducedPoly&) const = default;
};

/// Reduces an arbitrary coefficient list modulo x^q - x and trims it.
ReducedPoly reduce(const Field& field, std::vector<Elem> coeffs);

/// Horner evaluation.
Elem evaluate(const Field& field, const ReducedPoly& f, Elem x);

/// The table of x -> f(x).
MapTable tabulate(FieldPtr field, const ReducedPoly& f);

/// The unique reduced polynomial agreeing with `table` everywhere. Uses the
/// Lagrange basis 1 - (x - a)^(q-1), which collapses to
///   c_0 = t(0),  c_j = -sum_{a != 0} t(a) a^(-j)  (0 < j < q-1),
///   c_{q-1} = -sum_a t(a).
/// O(q^2) field operations.
ReducedPoly interpolate(const MapTable& table);

int reduced_degree(const MapTable& table);

/// Number of points where f and g disagree. Throws PreconditionError if the
/// tables live over different fields.
std::size_t hamming_distance(const MapTable& f, const MapTable& g);

} // namespace orthokit
