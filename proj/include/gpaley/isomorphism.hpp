#pragma once

#include <optional>
#include <vector>

#include "gpaley/refinement.hpp"

namespace gpaley {

namespace detail {

class IsoSearcher {
public:
    IsoSearcher(const Graph& g, const Graph& h)
        : rg_(g), rh_(h), refine_g_(rg_), refine_h_(rh_)
    {
    }

    std::optional<std::vector<int>> run()
    {
        int n = rg_.n();
        Partition pg = Partition::unit(n), ph = Partition::unit(n);
        std::vector<int> wl;
        for (int s = 0; s < n; s += pg.cell_size[s])
            wl.push_back(s);
        std::uint64_t hg = refine_g_.refine(pg, wl);
        std::uint64_t hh = refine_h_.refine(ph, wl);
        if (hg != hh)
            return std::nullopt;
        return descend(pg, ph);
    }

private:
    std::optional<std::vector<int>> descend(const Partition& pg, const Partition& ph)
    {
        if (pg.discrete()) {
            if (!ph.discrete())
                return std::nullopt;
            std::vector<int> map(pg.n());
            for (int i = 0; i < pg.n(); ++i)
                map[pg.elems[i]] = ph.elems[i];
            return verify(map) ? std::optional(map) : std::nullopt;
        }
        int cs = pg.first_largest_cell();
        if (ph.discrete() || ph.cell_of[ph.elems[cs]] != cs ||
            ph.cell_size[cs] != pg.cell_size[cs])
            return std::nullopt;

        int v = *std::min_element(pg.elems.begin() + cs,
                                  pg.elems.begin() + cs + pg.cell_size[cs]);
        Partition pg_child = pg;
        std::vector<int> wlg;
        pg_child.individualize(v, wlg);
        std::uint64_t hg = refine_g_.refine(pg_child, std::move(wlg));

        std::vector<int> candidates = ph.cell_members(cs);
        std::sort(candidates.begin(), candidates.end());
        for (int w : candidates) {
            Partition ph_child = ph;
            std::vector<int> wlh;
            ph_child.individualize(w, wlh);
            std::uint64_t hh = refine_h_.refine(ph_child, std::move(wlh));
            if (hh != hg)
                continue;
            if (auto found = descend(pg_child, ph_child))
                return found;
        }
        return std::nullopt;
    }

    bool verify(const std::vector<int>& map) const
    {
        const Graph& g = *rg_.g;
        const Graph& h = *rh_.g;
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) != h.degree(map[v]))
                return false;
            bool ok = true;
            g.for_each_neighbor(v, [&](int u) {
                if (u > v && !h.adjacent(map[v], map[u]))
                    ok = false;
            });
            if (!ok)
                return false;
        }
        return true;
    }

    GraphRelation rg_, rh_;
    Refiner<GraphRelation> refine_g_, refine_h_;
};

} // namespace detail

/// Certificate-producing isomorphism test: an explicit edge-preserving vertex
/// bijection g -> h, or nullopt. Lockstep individualization-refinement over
/// both graphs (the same engine as the automorphism search); intended for
/// n <= 256.
inline std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h,
                                                     int max_n = 256)
{
    if (g.n() > max_n || h.n() > max_n)
        throw BoundExceededError("isomorphism oracle bound exceeded");
    if (g.n() != h.n() || g.edge_count() != h.edge_count())
        return std::nullopt;
    std::vector<int> dg(g.n()), dh(h.n());
    for (int v = 0; v < g.n(); ++v)
        dg[v] = g.degree(v);
    for (int v = 0; v < h.n(); ++v)
        dh[v] = h.degree(v);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return std::nullopt;
    detail::IsoSearcher searcher(g, h);
    return searcher.run();
}

} // namespace gpaley
