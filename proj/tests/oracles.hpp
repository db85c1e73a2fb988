#pragma once

// Independent reference implementations used to freeze expected values.
// Everything here is deliberately brute force and shares no code path with
// the library machinery it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "gpaley/finite_field.hpp"
#include "gpaley/graph.hpp"
#include "gpaley/permutation.hpp"

namespace oracles {

using gpaley::Fe;
using gpaley::Field;
using gpaley::Graph;
using gpaley::Perm;

/// Multiplicative order of a nonzero element by repeated multiplication.
inline int64_t element_order(const Field& f, Fe a)
{
    Fe x = a;
    int64_t n = 1;
    while (x != f.one()) {
        x = f.mul(x, a);
        ++n;
    }
    return n;
}

/// Group order by breadth-first closure over composition. Only for orders
/// a caller knows to be small (<= ~10^5).
inline int64_t brute_group_order(int degree, const std::vector<Perm>& gens)
{
    std::set<std::vector<std::int32_t>> seen;
    std::vector<Perm> queue{Perm::identity(degree)};
    seen.insert(queue[0].img);
    while (!queue.empty()) {
        Perm p = std::move(queue.back());
        queue.pop_back();
        for (const Perm& g : gens) {
            Perm next = p.then(g);
            if (seen.insert(next.img).second)
                queue.push_back(std::move(next));
        }
    }
    return static_cast<int64_t>(seen.size());
}

/// All elements of the generated group (small groups only).
inline std::vector<Perm> brute_group_elements(int degree, const std::vector<Perm>& gens)
{
    std::set<std::vector<std::int32_t>> seen;
    std::vector<Perm> out{Perm::identity(degree)};
    seen.insert(out[0].img);
    for (std::size_t head = 0; head < out.size(); ++head)
        for (const Perm& g : gens) {
            Perm next = out[head].then(g);
            if (seen.insert(next.img).second)
                out.push_back(std::move(next));
        }
    return out;
}

inline bool is_automorphism(const Graph& g, const std::vector<int>& img)
{
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v) != g.adjacent(img[u], img[v]))
                return false;
    return true;
}

/// |Aut(g)| by iterating all n! permutations (n <= 8 or so).
inline int64_t brute_aut_order(const Graph& g)
{
    std::vector<int> img(g.n());
    std::iota(img.begin(), img.end(), 0);
    int64_t count = 0;
    do {
        if (is_automorphism(g, img))
            ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    return count;
}

/// Monic polynomials of degree d over F_p as coefficient vectors c0..c_{d-1}
/// (leading 1 implicit), in lexicographic low-degree-first order.
inline std::vector<std::vector<int64_t>> monic_polys(int64_t p, int d)
{
    int64_t count = 1;
    for (int i = 0; i < d; ++i)
        count *= p;
    std::vector<std::vector<int64_t>> out;
    for (int64_t idx = 0; idx < count; ++idx) {
        std::vector<int64_t> c(d);
        int64_t v = idx;
        // low-degree-first lexicographic: c0 varies slowest
        for (int i = d - 1; i >= 0; --i) {
            c[i] = v % p;
            v /= p;
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// Naive irreducibility: no monic factor of degree 1..d/2 divides it.
inline bool naive_irreducible(const std::vector<int64_t>& c, int64_t p)
{
    int d = static_cast<int>(c.size());
    std::vector<int64_t> full(c);
    full.push_back(1);
    for (int e = 1; 2 * e <= d; ++e)
        for (const auto& fc : monic_polys(p, e)) {
            // long division of full by fc+x^e; irreducible iff never exact
            std::vector<int64_t> rem(full);
            std::vector<int64_t> divisor(fc);
            divisor.push_back(1);
            for (int pos = static_cast<int>(rem.size()) - 1;
                 pos >= static_cast<int>(divisor.size()) - 1; --pos) {
                int64_t coef = rem[pos];
                if (coef == 0)
                    continue;
                int shift = pos - (static_cast<int>(divisor.size()) - 1);
                for (std::size_t i = 0; i < divisor.size(); ++i)
                    rem[shift + i] = ((rem[shift + i] - coef * divisor[i]) % p + p) % p;
            }
            if (std::all_of(rem.begin(), rem.end(), [](int64_t x) { return x == 0; }))
                return false;
        }
    return true;
}

/// Deterministic small PRNG for test graphs.
inline std::uint64_t next_rand(std::uint64_t& state)
{
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
}

inline Graph random_graph(int n, std::uint64_t seed, int density_percent = 50)
{
    Graph g(n);
    std::uint64_t state = seed * 2654435761u + 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (next_rand(state) % 100 < static_cast<std::uint64_t>(density_percent))
                g.add_edge(u, v);
    return g;
}

inline Graph relabel(const Graph& g, const std::vector<int>& map)
{
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v))
                h.add_edge(map[u], map[v]);
    return h;
}

} // namespace oracles
