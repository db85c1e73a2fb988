#pragma once

#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gpaley/cyclotomic.hpp"
#include "gpaley/scan.hpp"
#include "gpaley/verify.hpp"

// JSON schemas (all versioned with "schema": "gpaley/1") and the scan CSV
// form. Group orders that fit in int64 are emitted as JSON integers,
// otherwise as decimal strings.

namespace gpaley {

using nlohmann::json;

inline constexpr const char* schema_tag = "gpaley/1";

inline json big_to_json(const BigInt& v)
{
    if (v <= std::numeric_limits<std::int64_t>::max() &&
        v >= std::numeric_limits<std::int64_t>::min())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline json field_to_json(const Field& f)
{
    return json{{"schema", schema_tag},
                {"p", f.p()},
                {"R", f.R()},
                {"modulus", f.modulus()},
                {"omega", f.coeffs(f.omega())}};
}

/// The dlog table is never serialized; the field is rebuilt from (p, R) and
/// the stored modulus/omega are required to match the canonical convention.
inline Field field_from_json(const json& j)
{
    Field f = Field::build(j.at("p").get<int64_t>(), j.at("R").get<int>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<int64_t>>() != f.modulus())
        throw FormatError("stored modulus does not match the canonical modulus");
    if (j.contains("omega") && j.at("omega").get<std::vector<int64_t>>() != f.coeffs(f.omega()))
        throw FormatError("stored omega does not match the canonical primitive element");
    return f;
}

inline json classification_to_json(int64_t p, int R, int64_t q, int64_t k,
                                   const Classification& c)
{
    json j{{"schema", schema_tag}, {"p", p}, {"R", R}, {"q", q}, {"k", k},
           {"valency", (q - 1) / k}};
    j["variant"] = variant_name(c.variant);
    j["a"] = c.a ? json(*c.a) : json(nullptr);
    j["b"] = c.b ? json(*c.b) : json(nullptr);
    j["k_prime"] = c.k_prime ? json(*c.k_prime) : json(nullptr);
    j["component_count"] = c.component_count ? json(*c.component_count) : json(nullptr);
    j["one_dim_affine_case"] = c.one_dim_affine_case;
    return j;
}

inline json perm_to_json(const Perm& p) { return json(p.img); }

inline json group_to_json(const PermutationGroup& g)
{
    json gens = json::array();
    for (const Perm& p : g.generators())
        gens.push_back(perm_to_json(p));
    return json{{"schema", schema_tag},
                {"degree", g.degree()},
                {"generators", gens},
                {"order", big_to_json(g.order())}};
}

/// Claimed orders are re-verified on load.
inline PermutationGroup group_from_json(const json& j)
{
    int degree = j.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& arr : j.at("generators"))
        gens.push_back(Perm(arr.get<std::vector<std::int32_t>>()));
    PermutationGroup g(degree, std::move(gens));
    if (j.contains("order")) {
        BigInt claimed = j.at("order").is_string() ? BigInt(j.at("order").get<std::string>())
                                                   : BigInt(j.at("order").get<std::int64_t>());
        if (g.order() != claimed)
            throw CheckFailedError("claimed group order does not match the generators");
    }
    return g;
}

inline json report_to_json(const VerificationReport& r, bool emit_generators = false)
{
    json j = classification_to_json(r.p, r.R, r.q, r.k, r.classification);
    j["aut_order"] = big_to_json(r.aut_order);
    j["predicted_aut_order"] =
        r.predicted_aut_order ? big_to_json(*r.predicted_aut_order) : json(nullptr);
    j["stabilizer0_order"] = big_to_json(r.stabilizer0_order);
    j["agl1_order"] = big_to_json(r.agl1_order);
    j["scheme_aut_order"] = r.scheme_aut_order ? big_to_json(*r.scheme_aut_order) : json(nullptr);
    json checks = json::object();
    for (const auto& [name, ok] : r.checks)
        checks[name] = ok;
    j["checks"] = checks;
    j["all_passed"] = r.all_passed();
    if (emit_generators) {
        json gens = json::array();
        for (const Perm& g : r.generators)
            gens.push_back(perm_to_json(g));
        j["generators"] = gens;
    }
    return j;
}

inline json table_to_json(const CyclotomicScheme& scheme, const IntersectionTable& t)
{
    json cube = json::array();
    for (int64_t h = 0; h <= t.k; ++h) {
        json plane = json::array();
        for (int64_t i = 0; i <= t.k; ++i) {
            json row = json::array();
            for (int64_t j = 0; j <= t.k; ++j)
                row.push_back(t.at(h, i, j));
            plane.push_back(std::move(row));
        }
        cube.push_back(std::move(plane));
    }
    return json{{"schema", schema_tag},
                {"p", scheme.field().p()},
                {"R", scheme.field().R()},
                {"q", scheme.q()},
                {"k", scheme.k()},
                {"class_size", scheme.class_size()},
                {"intersection_numbers", cube}};
}

inline json scan_row_to_json(const ScanRow& r)
{
    json j{{"schema", schema_tag}, {"p", r.p},
           {"R", r.R},             {"q", r.q},
           {"k", r.k},             {"valency", r.valency}};
    if (r.classification) {
        const Classification& c = *r.classification;
        j["variant"] = variant_name(c.variant);
        j["a"] = c.a ? json(*c.a) : json(nullptr);
        j["b"] = c.b ? json(*c.b) : json(nullptr);
        j["k_prime"] = c.k_prime ? json(*c.k_prime) : json(nullptr);
        j["component_count"] = c.component_count ? json(*c.component_count) : json(nullptr);
        j["one_dim_affine_case"] = c.one_dim_affine_case;
    } else {
        j["variant"] = nullptr;
    }
    j["aut_order"] = r.aut_order ? big_to_json(*r.aut_order) : json(nullptr);
    j["predicted_aut_order"] =
        r.predicted_aut_order ? big_to_json(*r.predicted_aut_order) : json(nullptr);
    j["checks_passed"] = r.checks_passed ? json(*r.checks_passed) : json(nullptr);
    j["error"] = r.error;
    return j;
}

inline std::string scan_csv_header()
{
    return "p,R,q,k,valency,variant,a,b,k_prime,component_count,one_dim_affine_case,"
           "aut_order,predicted_aut_order,checks_passed,error";
}

inline std::string scan_row_to_csv(const ScanRow& r)
{
    auto opt_str = [](const auto& o) -> std::string {
        if (!o)
            return "";
        std::ostringstream s;
        s << *o;
        return s.str();
    };
    std::ostringstream s;
    s << r.p << ',' << r.R << ',' << r.q << ',' << r.k << ',' << r.valency << ',';
    if (r.classification) {
        const Classification& c = *r.classification;
        s << variant_name(c.variant) << ',' << opt_str(c.a) << ',' << opt_str(c.b) << ','
          << opt_str(c.k_prime) << ',' << opt_str(c.component_count) << ','
          << (c.one_dim_affine_case ? "true" : "false") << ',';
    } else {
        s << ",,,,,,";
    }
    s << opt_str(r.aut_order) << ',' << opt_str(r.predicted_aut_order) << ',';
    if (r.checks_passed)
        s << (*r.checks_passed ? "true" : "false");
    s << ',' << r.error;
    return s.str();
}

} // namespace gpaley
