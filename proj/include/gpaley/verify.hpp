#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpaley/aut_search.hpp"
#include "gpaley/cyclotomic.hpp"
#include "gpaley/gpaley.hpp"
#include "gpaley/group_constructions.hpp"

// The computational restatement of the main theorem: compute Aut(Gamma) and
// check, per classification variant, exactly what the theorem predicts.
// Check names appear exactly once each; checks that do not apply to the
// variant at hand hold vacuously.

namespace gpaley {

struct VerifyOptions {
    double timeout_seconds = 300.0;
    int aut_max_n = 1024;
    int scheme_max_n = 256; // color search bound for the k | p-1 comparison
};

struct VerificationReport {
    int64_t p = 0;
    int R = 0;
    int64_t q = 0, k = 0, valency = 0;
    Classification classification;
    BigInt aut_order;
    std::optional<BigInt> predicted_aut_order;
    BigInt stabilizer0_order;
    BigInt agl1_order;
    std::optional<BigInt> scheme_aut_order;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<Perm> generators;

    bool all_passed() const
    {
        for (const auto& [name, ok] : checks)
            if (!ok)
                return false;
        return true;
    }

    bool check(const std::string& name) const
    {
        for (const auto& [n, ok] : checks)
            if (n == name)
                return ok;
        throw OutOfRangeError("no such check: " + name);
    }
};

inline VerificationReport verify_theorem(const GPaleyParams& params, const VerifyOptions& opt = {})
{
    const Field& f = params.field;
    VerificationReport rep;
    rep.p = params.p();
    rep.R = params.R();
    rep.q = params.q();
    rep.k = params.k;
    rep.valency = params.valency();
    rep.classification = classify(params);

    AutOptions aut_opt;
    aut_opt.max_n = opt.aut_max_n;
    aut_opt.timeout_seconds = opt.timeout_seconds;

    Graph graph = build_graph(params);
    AutResult aut = automorphism_group(graph, aut_opt);
    const PermutationGroup& a = aut.group;
    rep.aut_order = a.order();
    rep.stabilizer0_order = a.stabilizer_order(0);
    rep.agl1_order = BigInt(rep.q) * (rep.q - 1) * rep.R;
    rep.generators = a.generators();

    // always: the arc-transitive affine subgroup T x| <w^k, alpha> embeds
    bool arc_sub = rep.aut_order % (BigInt(rep.q) * rep.valency) == 0;
    for (const Perm& g : affine_generators(f, params.k).generators())
        arc_sub = arc_sub && a.contains(g);

    bool primitive_ok = true;
    bool affine_ok = true;
    bool wreath_ok = true;
    bool hamming_ok = true;
    bool one_dim_ok = true;

    switch (rep.classification.variant) {
    case Variant::Disconnected: {
        Decomposition dec = decompose(params);
        AutResult aut0 = automorphism_group(dec.component, aut_opt);
        BigInt predicted = 1;
        for (int64_t i = 0; i < dec.component_count; ++i)
            predicted *= aut0.group.order();
        predicted *= factorial_big(dec.component_count);
        rep.predicted_aut_order = predicted;
        wreath_ok = rep.aut_order == predicted;
        // double-entry: Aut of a freshly built GPaley(p^a,(p^a-1)/k') must
        // match the component's group order
        Field sub = Field::build(params.p(), dec.a);
        Graph reference = dec.k_prime == 1
                              ? Graph::complete(static_cast<int>(sub.q()))
                              : build_graph(GPaleyParams::make(std::move(sub), dec.k_prime));
        wreath_ok = wreath_ok &&
                    automorphism_group(reference, aut_opt).group.order() == aut0.group.order();
        break;
    }
    case Variant::Hamming: {
        int sub_q = static_cast<int>(ipow(params.p(), *rep.classification.a));
        int b = *rep.classification.b;
        BigInt predicted = wreath_order(sub_q, b);
        rep.predicted_aut_order = predicted;
        hamming_ok = rep.aut_order == predicted;
        // the wreath product, conjugated into field coordinates by Theta,
        // must embed in A
        HammingIso iso = hamming_isomorphism(params);
        Perm theta;
        theta.img.assign(iso.theta.begin(), iso.theta.end());
        Perm theta_inv = theta.inverse();
        for (const Perm& g : wreath_product_action(sub_q, b).generators())
            wreath_ok = wreath_ok && a.contains(theta.then(g).then(theta_inv));
        break;
    }
    case Variant::ConnectedNonHamming: {
        primitive_ok = a.is_primitive();
        affine_ok = a.normalizes(translations(f));
        if (rep.classification.one_dim_affine_case) {
            BigInt predicted = BigInt(rep.q) * rep.R * rep.valency;
            rep.predicted_aut_order = predicted;
            one_dim_ok = rep.aut_order == predicted;
            if (rep.q <= opt.scheme_max_n) {
                CyclotomicScheme scheme = CyclotomicScheme::build(f, params.k);
                rep.scheme_aut_order = scheme_automorphism_order(scheme, aut_opt);
                one_dim_ok = one_dim_ok && *rep.scheme_aut_order == rep.aut_order;
            }
        }
        break;
    }
    }

    rep.checks = {
        {"primitive", primitive_ok},
        {"contained_in_affine", affine_ok},
        {"normal_cayley", affine_ok},
        {"arc_transitive_subgroup_present", arc_sub},
        {"wreath_structure", wreath_ok},
        {"hamming_order", hamming_ok},
        {"one_dim_affine_order", one_dim_ok},
    };
    return rep;
}

} // namespace gpaley
