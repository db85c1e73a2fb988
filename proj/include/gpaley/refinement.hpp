#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gpaley/graph.hpp"
#include "gpaley/permutation.hpp"

// Equitable-partition refinement, the engine under the automorphism search
// and the isomorphism oracle. Cells are identified by their start position in
// the element order; start positions, cell sizes and split keys are all
// invariant under relabelling, so the accumulated refinement trace doubles as
// the node invariant of the search tree.

namespace gpaley {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v)
{
    return (h ^ splitmix64(v)) * 0x100000001b3ULL;
}

/// Ordered partition of [0, n): `elems` lists the vertices cell by cell,
/// a cell is named by its start position.
struct Partition {
    std::vector<std::int32_t> elems;
    std::vector<std::int32_t> pos;       // pos[v] = index of v in elems
    std::vector<std::int32_t> cell_of;   // cell_of[v] = start position of v's cell
    std::vector<std::int32_t> cell_size; // valid at start positions only
    int cells = 0;

    static Partition unit(int n)
    {
        Partition p;
        p.elems.resize(n);
        p.pos.resize(n);
        p.cell_of.assign(n, 0);
        p.cell_size.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            p.elems[i] = i;
            p.pos[i] = i;
        }
        if (n > 0)
            p.cell_size[0] = n;
        p.cells = n > 0 ? 1 : 0;
        return p;
    }

    int n() const { return static_cast<int>(elems.size()); }
    bool discrete() const { return cells == n(); }

    /// Start of the first cell of maximum size (>= 2), or -1 when discrete.
    int first_largest_cell() const
    {
        int best = -1, best_size = 1;
        for (int s = 0; s < n(); s += cell_size[s])
            if (cell_size[s] > best_size) {
                best = s;
                best_size = cell_size[s];
            }
        return best;
    }

    std::vector<int> cell_members(int s) const
    {
        return std::vector<int>(elems.begin() + s, elems.begin() + s + cell_size[s]);
    }

    /// Split {v} off the front of its cell. Appends the affected cell starts
    /// to `worklist`.
    void individualize(int v, std::vector<int>& worklist)
    {
        int s = cell_of[v];
        int size = cell_size[s];
        int pv = pos[v];
        std::swap(elems[s], elems[pv]);
        pos[elems[pv]] = pv;
        pos[v] = s;
        cell_size[s] = 1;
        worklist.push_back(s);
        if (size > 1) {
            int ns = s + 1;
            cell_size[ns] = size - 1;
            for (int i = ns; i < s + size; ++i)
                cell_of[elems[i]] = ns;
            cells += 1;
            worklist.push_back(ns);
        }
    }
};

/// Plain-graph relation: split keys are neighbor counts into the refining cell.
struct GraphRelation {
    const Graph* g;

    explicit GraphRelation(const Graph& graph) : g(&graph) {}

    int n() const { return g->n(); }

    void count(const std::vector<int>& members, std::vector<std::uint64_t>& key,
               std::vector<int>& touched, std::vector<char>& tflag) const
    {
        for (int w : members)
            g->for_each_neighbor(w, [&](int u) {
                if (!tflag[u]) {
                    tflag[u] = 1;
                    touched.push_back(u);
                }
                key[u] += 1;
            });
    }

    bool preserves(const Perm& perm) const
    {
        for (int v = 0; v < g->n(); ++v) {
            bool ok = true;
            g->for_each_neighbor(v, [&](int u) {
                if (u > v && !g->adjacent(perm(v), perm(u)))
                    ok = false;
            });
            if (!ok)
                return false;
        }
        return true;
    }
};

/// Edge-colored complete-graph relation (colors on unordered pairs, stored as
/// a symmetric n*n matrix). Split keys are commutative hashes of the color
/// multiset toward the refining cell, so they stay label-invariant.
struct ColorRelation {
    int size;
    const std::vector<std::uint16_t>* colors; // row-major n*n
    std::vector<std::uint64_t> color_hash;

    ColorRelation(int n, const std::vector<std::uint16_t>& matrix, int ncolors)
        : size(n), colors(&matrix)
    {
        color_hash.resize(ncolors);
        for (int c = 0; c < ncolors; ++c)
            color_hash[c] = splitmix64(0x5bd1e995ULL + c) | 1;
    }

    int n() const { return size; }
    std::uint16_t color(int u, int v) const { return (*colors)[std::size_t(u) * size + v]; }

    void count(const std::vector<int>& members, std::vector<std::uint64_t>& key,
               std::vector<int>& touched, std::vector<char>& tflag) const
    {
        for (int w : members) {
            const std::uint16_t* row = colors->data() + std::size_t(w) * size;
            for (int u = 0; u < size; ++u) {
                if (u == w)
                    continue;
                if (!tflag[u]) {
                    tflag[u] = 1;
                    touched.push_back(u);
                }
                key[u] += color_hash[row[u]];
            }
        }
    }

    bool preserves(const Perm& perm) const
    {
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v)
                if (color(u, v) != color(perm(u), perm(v)))
                    return false;
        return true;
    }
};

/// Refines `P` to the coarsest equitable partition refining it, processing
/// the given worklist of refining cells. Returns the refinement-trace hash.
template <class Rel>
class Refiner {
public:
    explicit Refiner(const Rel& rel) : rel_(rel)
    {
        int n = rel_.n();
        key_.assign(n, 0);
        tflag_.assign(n, 0);
        cflag_.assign(n, 0);
        touched_.reserve(n);
    }

    const Rel& relation() const { return rel_; }

    std::uint64_t refine(Partition& p, std::vector<int> worklist)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        std::size_t head = 0;
        while (head < worklist.size()) {
            int ws = worklist[head++];
            // stale entries still name a valid (possibly shrunken) cell
            std::vector<int> members = p.cell_members(ws);
            touched_.clear();
            rel_.count(members, key_, touched_, tflag_);

            // distinct touched cells, ascending
            cells_to_check_.clear();
            for (int u : touched_) {
                int cs = p.cell_of[u];
                if (!cflag_[cs] && p.cell_size[cs] >= 2) {
                    cflag_[cs] = 1;
                    cells_to_check_.push_back(cs);
                }
            }
            std::sort(cells_to_check_.begin(), cells_to_check_.end());
            for (int cs : cells_to_check_)
                cflag_[cs] = 0;

            for (int xs : cells_to_check_) {
                int xsize = p.cell_size[xs];
                auto begin = p.elems.begin() + xs;
                auto end = begin + xsize;
                std::uint64_t k0 = key_[*begin];
                bool uniform = true;
                for (auto it = begin + 1; it != end; ++it)
                    if (key_[*it] != k0) {
                        uniform = false;
                        break;
                    }
                if (uniform)
                    continue;

                std::stable_sort(begin, end, [&](int a, int b) { return key_[a] < key_[b]; });
                for (int i = xs; i < xs + xsize; ++i)
                    p.pos[p.elems[i]] = i;

                h = hash_mix(h, static_cast<std::uint64_t>(ws));
                h = hash_mix(h, static_cast<std::uint64_t>(xs));
                int frag_start = xs;
                for (int i = xs + 1; i <= xs + xsize; ++i) {
                    if (i == xs + xsize || key_[p.elems[i]] != key_[p.elems[frag_start]]) {
                        p.cell_size[frag_start] = i - frag_start;
                        for (int j = frag_start; j < i; ++j)
                            p.cell_of[p.elems[j]] = frag_start;
                        h = hash_mix(h, static_cast<std::uint64_t>(i - frag_start));
                        h = hash_mix(h, key_[p.elems[frag_start]]);
                        worklist.push_back(frag_start);
                        if (frag_start != xs)
                            p.cells += 1;
                        frag_start = i;
                    }
                }
            }

            for (int u : touched_) {
                key_[u] = 0;
                tflag_[u] = 0;
            }
        }
        // final cell-structure signature
        for (int s = 0; s < p.n(); s += p.cell_size[s])
            h = hash_mix(h, static_cast<std::uint64_t>(s));
        return h;
    }

private:
    const Rel& rel_;
    std::vector<std::uint64_t> key_;
    std::vector<char> tflag_, cflag_;
    std::vector<int> touched_, cells_to_check_;
};

} // namespace gpaley
