#pragma once

#include <cstring>
#include <string>
#include <vector>

#include "gpaley/aut_search.hpp"
#include "gpaley/gpaley.hpp"
#include "gpaley/group_constructions.hpp"

// The k-class symmetric cyclotomic association scheme Cyc(q,k): relations
// R_i = {(x,y) | y-x in S w^i}, intersection numbers with an exhaustive
// well-definedness check, primitivity, and the scheme automorphism group as
// a color-preserving automorphism search.

namespace gpaley {

struct IntersectionTable {
    int64_t k;
    std::vector<std::uint32_t> entries; // dense (k+1)^3

    std::uint32_t at(int64_t h, int64_t i, int64_t j) const
    {
        return entries[(h * (k + 1) + i) * (k + 1) + j];
    }
};

class CyclotomicScheme {
public:
    /// Validates the Definition 1.1 conditions (which guarantee -1 in S(k),
    /// hence symmetry of every class); an asymmetric class would mean the
    /// parity precondition is broken and raises SymmetryViolation.
    static CyclotomicScheme build(Field field, int64_t k)
    {
        GPaleyParams params = GPaleyParams::make(std::move(field), k); // same validity conditions
        const Field& f = params.field;
        if (f.discrete_log(f.neg(f.one())) % k != 0)
            throw SymmetryViolationError("-1 is not in S(k); parity precondition violated");
        return CyclotomicScheme(std::move(params));
    }

    const Field& field() const { return params_.field; }
    const GPaleyParams& params() const { return params_; }
    int64_t k() const { return params_.k; }
    int64_t q() const { return params_.field.q(); }
    /// Size of each class orbit S(k)w^i, i.e. (q-1)/k.
    int64_t class_size() const { return params_.valency(); }

    /// Class of the ordered pair (x,y): 0 on the diagonal, else in {1..k}
    /// with residue dlog(y-x) mod k and residue 0 mapping to class k (so the
    /// relation graph Gamma_k is the generalised Paley graph itself).
    int class_of(Fe x, Fe y) const
    {
        if (x == y)
            return 0;
        int64_t r = params_.field.discrete_log(params_.field.sub(y, x)) % params_.k;
        return static_cast<int>(r == 0 ? params_.k : r);
    }

    /// Relation graph Gamma_i, edges {x,y} with class i.
    Graph relation_graph(int64_t i) const
    {
        if (i < 1 || i > params_.k)
            throw OutOfRangeError("relation index out of range");
        const Field& f = params_.field;
        std::vector<Fe> coset;
        for (int64_t j = 0; j < class_size(); ++j)
            coset.push_back(f.exp(j * params_.k + i));
        return Graph::cayley(f, coset);
    }

    /// The multiplication map x -> x * w^{j-i}, which carries Gamma_i onto
    /// Gamma_j (asserted).
    Perm relation_graph_isomorphism(int64_t i, int64_t j) const
    {
        if (i < 1 || i > params_.k || j < 1 || j > params_.k)
            throw OutOfRangeError("relation index out of range");
        const Field& f = params_.field;
        Perm map = scalar_map(f, f.exp(j - i));
        for (int64_t x = 0; x < f.q(); ++x)
            for (int64_t c = 0; c < class_size(); ++c) {
                Fe y = f.add(static_cast<Fe>(x), f.exp(c * params_.k + i));
                if (class_of(map(static_cast<int>(x)), map(static_cast<int>(y))) != j)
                    throw CheckFailedError("multiplication map does not carry R_i to R_j");
            }
        return map;
    }

    /// Primitive iff every relation graph is connected; since they are
    /// pairwise isomorphic this is BFS on Gamma_k, asserted to agree with the
    /// arithmetic connectivity criterion.
    bool is_primitive() const
    {
        bool bfs = build_graph(params_).connected();
        if (bfs != is_connected_by_criterion(params_))
            throw CheckFailedError("BFS connectivity disagrees with the arithmetic criterion");
        return bfs;
    }

    std::vector<std::uint16_t> color_matrix() const
    {
        int n = static_cast<int>(q());
        std::vector<std::uint16_t> colors(std::size_t(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                colors[std::size_t(x) * n + y] =
                    static_cast<std::uint16_t>(class_of(static_cast<Fe>(x), static_cast<Fe>(y)));
        return colors;
    }

    /// Intersection numbers p_{ij}^h from one representative pair per class.
    ///
    /// With full_check, the well-definedness axiom is verified exhaustively:
    /// because class_of(x,y) is a function of y-x, the z-count of any pair
    /// (x,y) equals that of (0, y-x) by the substitution z -> z-x, so the
    /// check recounts the distribution for every difference d in V*, and
    /// additionally recounts pairs directly (all pairs for q <= 64, a
    /// deterministic sample above) to guard that identity itself.
    IntersectionTable intersection_numbers(bool full_check = false, int64_t max_q = 4096) const
    {
        const Field& f = params_.field;
        int64_t k = params_.k, q = f.q();
        if (q > max_q)
            throw BoundExceededError("q exceeds the intersection-number bound");
        if ((k + 1) * (k + 1) * (k + 1) > (int64_t{1} << 27))
            throw BoundExceededError("dense (k+1)^3 table would be too large");

        IntersectionTable table{k, std::vector<std::uint32_t>(
                                       static_cast<std::size_t>((k + 1) * (k + 1) * (k + 1)), 0)};
        auto slot = [&](int64_t h, int64_t i, int64_t j) -> std::uint32_t& {
            return table.entries[static_cast<std::size_t>((h * (k + 1) + i) * (k + 1) + j)];
        };
        for (int64_t h = 0; h <= k; ++h) {
            Fe d = h == 0 ? 0 : f.exp(h); // a representative with class_of(0,d) = h
            for (int64_t z = 0; z < q; ++z)
                slot(h, class_of(0, static_cast<Fe>(z)), class_of(static_cast<Fe>(z), d)) += 1;
        }

        if (full_check) {
            std::vector<std::uint32_t> counts(static_cast<std::size_t>((k + 1) * (k + 1)));
            auto check_pair = [&](Fe x, Fe y) {
                std::memset(counts.data(), 0, counts.size() * sizeof(std::uint32_t));
                for (int64_t z = 0; z < q; ++z)
                    counts[static_cast<std::size_t>(class_of(x, static_cast<Fe>(z)) * (k + 1) +
                                                    class_of(static_cast<Fe>(z), y))] += 1;
                int64_t h = class_of(x, y);
                for (int64_t i = 0; i <= k; ++i)
                    for (int64_t j = 0; j <= k; ++j)
                        if (counts[static_cast<std::size_t>(i * (k + 1) + j)] != slot(h, i, j))
                            throw NotASchemeError(
                                "intersection number not well defined: h=" + std::to_string(h) +
                                " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                " at pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
            };
            for (int64_t d = 1; d < q; ++d)
                check_pair(0, static_cast<Fe>(d));
            if (q <= 64) {
                for (int64_t x = 0; x < q; ++x)
                    for (int64_t y = 0; y < q; ++y)
                        check_pair(static_cast<Fe>(x), static_cast<Fe>(y));
            } else {
                std::uint64_t state = 0x4d595df4d0f33173ULL;
                for (int t = 0; t < 2000; ++t) {
                    state = splitmix64(state);
                    Fe x = static_cast<Fe>(state % q);
                    state = splitmix64(state);
                    Fe y = static_cast<Fe>(state % q);
                    check_pair(x, y);
                }
            }
        }
        return table;
    }

private:
    explicit CyclotomicScheme(GPaleyParams params) : params_(std::move(params)) {}

    GPaleyParams params_;
};

/// |Aut(V,R)| = |intersection of the relation-graph automorphism groups|,
/// computed as the color-preserving automorphism group of the k-coloring of
/// the complete graph.
inline BigInt scheme_automorphism_order(const CyclotomicScheme& scheme, const AutOptions& opt = {})
{
    int n = static_cast<int>(scheme.q());
    if (n > 256)
        throw BoundExceededError("scheme automorphism search bounded at q <= 256");
    auto colors = scheme.color_matrix();
    AutResult r = color_automorphism_group(n, colors, static_cast<int>(scheme.k()) + 1, opt);
    return r.group.order();
}

} // namespace gpaley
