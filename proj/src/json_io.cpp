#include "orthokit/json_io.hpp"

#include <cstdint>
#include <string>

#include "orthokit/errors.hpp"

namespace orthokit {

namespace {

bool is_code(const Json& v) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>() <= 0xffffffffu;
    return v.is_number_integer() && v.get<std::int64_t>() >= 0 && v.get<std::int64_t>() <= 0xffffffffll;
}

std::vector<Elem> elem_list(const Json& j, const char* what) {
    if (!j.is_array()) throw PreconditionError(std::string(what) + " must be an array of integers");
    std::vector<Elem> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!is_code(v)) {
            throw PreconditionError(std::string(what) + " must contain non-negative integers");
        }
        out.push_back(v.get<Elem>());
    }
    return out;
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing \"") + key + "\"");
    return j.at(key);
}

Json triples(const std::vector<Triple>& set) {
    Json out = Json::array();
    for (const Triple& t : set) out.push_back({t.row, t.col, t.sym});
    return out;
}

} // namespace

Json to_json(const Field& field) {
    return Json{{"p", field.p()}, {"r", field.r()}, {"modulus", field.modulus()}, {"gamma", field.gamma()}};
}

FieldPtr field_from_json(const Json& j) {
    const Json& p = member(j, "p");
    const Json& r = member(j, "r");
    if (!is_code(p) || !is_code(r)) throw PreconditionError("p and r must be integers");
    std::optional<std::vector<Elem>> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = elem_list(j.at("modulus"), "modulus");
    std::optional<Elem> gamma;
    if (j.contains("gamma") && !j.at("gamma").is_null()) {
        if (!is_code(j.at("gamma"))) throw PreconditionError("gamma must be an integer code");
        gamma = j.at("gamma").get<Elem>();
    }
    return Field::build(p.get<std::uint32_t>(), r.get<std::uint32_t>(), std::move(modulus), gamma);
}

Json to_json(const ReducedPoly& poly) {
    return Json{{"coeffs", poly.coeffs}};
}

ReducedPoly poly_from_json(const Json& j, const Field& field) {
    return reduce(field, elem_list(member(j, "coeffs"), "coeffs"));
}

Json to_json(const MapTable& table) {
    return Json{{"field", to_json(table.field())},
                {"values", std::vector<Elem>(table.values().begin(), table.values().end())}};
}

MapTable map_from_json(const Json& j) {
    return MapTable(field_from_json(member(j, "field")), elem_list(member(j, "values"), "values"));
}

MapTable map_from_json(const Json& j, const FieldPtr& field) {
    if (j.is_object() && j.contains("field")) return map_from_json(j);
    if (!field) throw PreconditionError("map document has no field and none was given");
    return MapTable(field, elem_list(member(j, "values"), "values"));
}

Json to_json(const CyclotomicProfile& profile) {
    Json out;
    out["min_index"] = profile.min_index ? Json(*profile.min_index) : Json(nullptr);
    out["coeffs"] = profile.coeffs;
    return out;
}

Json to_json(const OrthoPair& pair) {
    return Json{{"f", to_json(pair.f)},
                {"g", to_json(pair.g)},
                {"distance", pair.distance},
                {"provenance", std::string(provenance_name(pair.provenance))},
                {"f_poly", to_json(interpolate(pair.f))},
                {"g_poly", to_json(interpolate(pair.g))}};
}

Json to_json(const Bitrade& bitrade) {
    return Json{{"k", bitrade.k}, {"L1", triples(bitrade.l1)}, {"L2", triples(bitrade.l2)}};
}

void write_csv(std::ostream& out, const Bitrade& bitrade) {
    out << "set,row,col,sym\n";
    for (const Triple& t : bitrade.l1) out << "L1," << t.row << ',' << t.col << ',' << t.sym << '\n';
    for (const Triple& t : bitrade.l2) out << "L2," << t.row << ',' << t.col << ',' << t.sym << '\n';
}

Json to_json(const CensusReport& report) {
    Json hist = Json::object();
    for (const auto& [deg, count] : report.degree_histogram) hist[std::to_string(deg)] = count;
    Json out;
    out["q"] = report.q;
    out["total_count"] = report.total_count;
    out["degree_histogram"] = hist;
    out["max_degree"] = report.max_degree() ? Json(*report.max_degree()) : Json(nullptr);
    out["min_distance"] = report.min_pairwise_distance ? Json(*report.min_pairwise_distance) : Json(nullptr);
    out["irregular_count"] = report.irregular_count;
    const Fraction frac = irregular_fraction(report);
    out["irregular_fraction"] = std::to_string(frac.num) + "/" + std::to_string(frac.den);
    out["non_irregular_bound"] = report.non_irregular_bound;
    out["within_counting_bound"] = within_counting_bound(report.q, report.total_count - report.irregular_count);
    return out;
}

} // namespace orthokit
