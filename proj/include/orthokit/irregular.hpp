#pragma once

#include <cstdint>
#include <string>

#include "orthokit/construct.hpp"
#include "orthokit/field.hpp"
#include "orthokit/map_table.hpp"

namespace orthokit {

struct IrregularWitness {
    MapTable table;
    /// THETA_A, MAX_DEGREE, ENUMERATION or RANDOM_COMPLETION.
    std::string method;
};

/// theta_a (coset offset c = smallest code outside H) for the first a in
/// code order whose theta_a is irregular. Even q >= 8.
IrregularWitness irregular_theta_a(const FieldPtr& field);

/// Finds a verified irregular orthomorphism:
///  - even q >= 8: irregular_theta_a;
///  - odd q > 7 with q != 1 mod 3: the degree q-3 orthomorphism;
///  - otherwise exhaustive enumeration for q <= 13 and seeded random
///    completions beyond that.
/// Throws NonexistenceError when enumeration proves there is none, and
/// SearchExhausted when the random search gives up.
IrregularWitness find_irregular(const FieldPtr& field, const CompletionOptions& options = {});

} // namespace orthokit
