#pragma once

// JSON and CSV forms of the toolkit's objects. Elements are always written
// as integer codes.

#include <ostream>

#include <json.hpp>

#include "orthokit/bitrade.hpp"
#include "orthokit/construct.hpp"
#include "orthokit/enumerate.hpp"
#include "orthokit/field.hpp"
#include "orthokit/map_table.hpp"
#include "orthokit/ortho.hpp"
#include "orthokit/poly.hpp"

namespace orthokit {

using Json = nlohmann::ordered_json;

/// {"p", "r", "modulus": [c0, ..., cr], "gamma"}
Json to_json(const Field& field);
/// Rebuilds the field; throws PreconditionError on malformed input.
FieldPtr field_from_json(const Json& j);

/// {"coeffs": [...]}, lowest degree first.
Json to_json(const ReducedPoly& poly);
/// Accepts any coefficient list and reduces it modulo x^q - x.
ReducedPoly poly_from_json(const Json& j, const Field& field);

/// {"field": {...}, "values": [...]}
Json to_json(const MapTable& table);
MapTable map_from_json(const Json& j);
/// Same, but falls back to `field` when the document has no "field" entry.
MapTable map_from_json(const Json& j, const FieldPtr& field);

/// {"min_index": n or null, "coeffs": [...]}
Json to_json(const CyclotomicProfile& profile);

/// {"f", "g", "distance", "provenance", "f_poly", "g_poly"}
Json to_json(const OrthoPair& pair);

/// {"k", "L1": [[r, c, s], ...], "L2": [...]}
Json to_json(const Bitrade& bitrade);
/// "set,row,col,sym" header, then one tagged triple per line.
void write_csv(std::ostream& out, const Bitrade& bitrade);

Json to_json(const CensusReport& report);

} // namespace orthokit
