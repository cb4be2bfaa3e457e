#include "orthokit/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "orthokit/bitrade.hpp"
#include "orthokit/construct.hpp"
#include "orthokit/enumerate.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/irregular.hpp"
#include "orthokit/json_io.hpp"
#include "orthokit/ortho.hpp"
#include "orthokit/poly.hpp"

namespace orthokit {

namespace {

struct FieldArgs {
    std::uint32_t p = 0;
    std::uint32_t r = 1;
    std::string modulus;

    FieldPtr build() const {
        std::optional<std::vector<Elem>> coeffs;
        if (!modulus.empty()) {
            std::vector<Elem> c;
            std::stringstream in(modulus);
            std::string item;
            while (std::getline(in, item, ',')) {
                try {
                    std::size_t used = 0;
                    const unsigned long v = std::stoul(item, &used);
                    if (used != item.size()) throw std::invalid_argument(item);
                    c.push_back(static_cast<Elem>(v));
                } catch (const std::logic_error&) {
                    throw PreconditionError("malformed modulus coefficient '" + item + "'");
                }
            }
            coeffs = std::move(c);
        }
        return Field::build(p, r, std::move(coeffs));
    }
};

void add_field_args(CLI::App* cmd, FieldArgs& args) {
    cmd->add_option("p", args.p, "Characteristic (prime)")->required();
    cmd->add_option("r", args.r, "Extension degree")->required();
    cmd->add_option("--modulus", args.modulus, "Monic modulus c0,c1,...,cr (constant term first)");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw PreconditionError(path + ": " + e.what());
    }
}

Json verification(const MapTable& t) {
    const bool ortho = is_orthomorphism(t);
    const CyclotomicProfile profile = cyclotomic_profile(t);
    Json out;
    out["q"] = t.field().q();
    out["permutation"] = is_permutation(t);
    out["orthomorphism"] = ortho;
    out["reduced_degree"] = reduced_degree(t);
    out["cyclotomic_min_index"] = profile.min_index ? Json(*profile.min_index) : Json(nullptr);
    out["irregular"] = ortho ? Json(is_irregular(t)) : Json(nullptr);
    return out;
}

Json error_payload(const char* kind, const std::string& reason) {
    return Json{{"error", kind}, {"reason", reason}};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-field orthomorphism toolkit"};
    app.require_subcommand(1);

    FieldArgs field_args;
    std::string format = "json";
    std::uint64_t seed = CompletionOptions{}.seed;
    unsigned jobs = 1;
    std::string map_file, poly_file;
    bool dump = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", seed, "Seed for randomized searches");
        cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App* field_cmd = app.add_subcommand("field", "Describe GF(p^r)");
    add_field_args(field_cmd, field_args);
    add_common(field_cmd);

    CLI::App* pair_cmd = app.add_subcommand("pair", "Two orthomorphisms at Hamming distance 3");
    add_field_args(pair_cmd, field_args);
    add_common(pair_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Check a map or polynomial");
    auto* map_opt = verify_cmd->add_option("--map", map_file, "Map JSON file");
    auto* poly_opt = verify_cmd->add_option("--poly", poly_file, "Polynomial JSON file");
    map_opt->excludes(poly_opt);
    verify_cmd->add_option("-p", field_args.p, "Characteristic, when the file has no field");
    verify_cmd->add_option("-r", field_args.r, "Extension degree, when the file has no field");
    verify_cmd->add_option("--modulus", field_args.modulus, "Modulus, when the file has no field");
    add_common(verify_cmd);

    CLI::App* bitrade_cmd = app.add_subcommand("bitrade", "3-homogeneous Latin bitrade");
    add_field_args(bitrade_cmd, field_args);
    add_common(bitrade_cmd);

    CLI::App* census_cmd = app.add_subcommand("census", "Exhaustive orthomorphism statistics");
    add_field_args(census_cmd, field_args);
    add_common(census_cmd);
    census_cmd->add_flag("--dump", dump, "Include every orthomorphism in the payload");

    CLI::App* irregular_cmd = app.add_subcommand("irregular", "Find a verified irregular orthomorphism");
    add_field_args(irregular_cmd, field_args);
    add_common(irregular_cmd);

    std::vector<const char*> argv{"orthokit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        out << error_payload("usage", e.what()).dump() << '\n';
        return kExitPrecondition;
    }

    const CompletionOptions options{seed, 0};
    try {
        if (format == "csv" && !bitrade_cmd->parsed()) {
            throw PreconditionError("--format csv is only available for bitrade");
        }
        Json payload;
        if (field_cmd->parsed()) {
            payload = to_json(*field_args.build());
        } else if (pair_cmd->parsed()) {
            payload = to_json(distance3_pair(field_args.build(), options));
        } else if (verify_cmd->parsed()) {
            FieldPtr field = field_args.p != 0 ? field_args.build() : nullptr;
            if (!map_file.empty()) {
                payload = verification(map_from_json(read_json_file(map_file), field));
            } else if (!poly_file.empty()) {
                const Json doc = read_json_file(poly_file);
                if (doc.is_object() && doc.contains("field")) field = field_from_json(doc.at("field"));
                if (!field) throw PreconditionError("polynomial document has no field and -p was not given");
                payload = verification(tabulate(field, poly_from_json(doc, *field)));
            } else {
                throw PreconditionError("verify needs --map or --poly");
            }
        } else if (bitrade_cmd->parsed()) {
            const OrthoPair pair = distance3_pair(field_args.build(), options);
            const Bitrade trade = build_bitrade(pair.f, pair.g);
            check_internal(validate_homogeneous(trade), "constructed bitrade is not homogeneous");
            if (format == "csv") {
                write_csv(out, trade);
                return kExitOk;
            }
            payload = to_json(trade);
        } else if (census_cmd->parsed()) {
            const FieldPtr field = field_args.build();
            payload = to_json(census(field, CensusOptions{jobs}));
            if (dump) {
                Json all = Json::array();
                for (const MapTable& t : all_orthomorphisms(field)) {
                    all.push_back(std::vector<Elem>(t.values().begin(), t.values().end()));
                }
                payload["orthomorphisms"] = std::move(all);
            }
        } else if (irregular_cmd->parsed()) {
            const IrregularWitness w = find_irregular(field_args.build(), options);
            payload["map"] = to_json(w.table);
            payload["poly"] = to_json(interpolate(w.table));
            payload["method"] = w.method;
            payload["reduced_degree"] = reduced_degree(w.table);
            payload["irregular"] = is_irregular(w.table);
        }
        out << payload.dump() << '\n';
        return kExitOk;
    } catch (const NonexistenceError& e) {
        err << "orthokit: " << e.what() << '\n';
        out << error_payload("nonexistence", e.what()).dump() << '\n';
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        err << "orthokit: " << e.what() << '\n';
        out << error_payload("precondition", e.what()).dump() << '\n';
        return kExitPrecondition;
    } catch (const SearchExhausted& e) {
        err << "orthokit: " << e.what() << '\n';
        out << error_payload("search_exhausted", e.what()).dump() << '\n';
        return kExitInternal;
    } catch (const InternalError& e) {
        err << "orthokit: internal error: " << e.what() << '\n';
        out << error_payload("internal", e.what()).dump() << '\n';
        return kExitInternal;
    }
}

} // namespace orthokit
