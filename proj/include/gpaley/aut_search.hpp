#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <vector>

#include "gpaley/perm_group.hpp"
#include "gpaley/refinement.hpp"

// Graph automorphism groups by individualization-refinement backtracking.
// The leftmost root-to-leaf path doubles as the base of an incrementally
// maintained BSGS of the automorphisms discovered so far; subtrees are pruned
// when their refinement trace deviates from the leftmost path's (sound: traces
// are relabelling-invariant) and siblings of leftmost-path children are
// skipped once they fall into the orbit of an explored child under the
// current stabilizer level (the discovered coset representative covers them).

namespace gpaley {

struct AutOptions {
    int max_n = 1024;
    double timeout_seconds = 300.0;
};

struct AutResult {
    PermutationGroup group;
    std::int64_t nodes = 0;
    std::int64_t automorphisms_found = 0;
};

template <class Rel>
class AutSearcher {
public:
    AutSearcher(const Rel& rel, const AutOptions& opt)
        : rel_(rel), n_(rel.n()), opt_(opt), refiner_(rel)
    {
    }

    AutResult run()
    {
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(opt_.timeout_seconds));
        first_.assign(n_ + 1, PathInfo{});
        Partition root = Partition::unit(n_);
        std::vector<int> wl;
        for (int s = 0; s < n_; s += root.cell_size[s])
            wl.push_back(s);
        std::uint64_t h = refiner_.refine(root, std::move(wl));
        first_node(root, 0, h);

        std::vector<Perm> gens = chain_->strong_generators_at(0);
        PermutationGroup group(n_, gens);
        group.adopt_chain(std::move(chain_));
        AutResult result{std::move(group), nodes_, autos_};
        return result;
    }

private:
    struct PathInfo {
        std::uint64_t hash = 0;
        int cell_start = -1;
        int cell_size = 0;
        bool discrete = false;
    };

    enum class Status { Exhausted, FoundAuto };

    void tick()
    {
        if ((++nodes_ & 0xff) == 0 && std::chrono::steady_clock::now() > deadline_)
            throw TimeoutError("automorphism search timed out");
    }

    void first_node(Partition& p, int depth, std::uint64_t h)
    {
        tick();
        first_[depth].hash = h;
        first_[depth].discrete = p.discrete();
        if (p.discrete()) {
            first_leaf_ = p.elems;
            chain_ = std::make_unique<StabChain>(n_, first_path_);
            return;
        }
        int cs = p.first_largest_cell();
        first_[depth].cell_start = cs;
        first_[depth].cell_size = p.cell_size[cs];

        std::vector<int> candidates = p.cell_members(cs);
        std::sort(candidates.begin(), candidates.end());

        first_path_.push_back(candidates[0]);
        {
            Partition child = p;
            std::vector<int> wl;
            child.individualize(candidates[0], wl);
            std::uint64_t ch = refiner_.refine(child, std::move(wl));
            first_node(child, depth + 1, ch);
        }

        std::vector<int> explored{candidates[0]};
        std::vector<char> covered = chain_->orbit_mask_at(depth, explored);
        int covered_version = chain_version_;
        for (std::size_t ci = 1; ci < candidates.size(); ++ci) {
            int w = candidates[ci];
            if (covered_version != chain_version_) {
                covered = chain_->orbit_mask_at(depth, explored);
                covered_version = chain_version_;
            }
            if (covered[w])
                continue;
            Partition child = p;
            std::vector<int> wl;
            child.individualize(w, wl);
            std::uint64_t ch = refiner_.refine(child, std::move(wl));
            if (ch == first_[depth + 1].hash)
                other_node(child, depth + 1);
            explored.push_back(w);
            covered = chain_->orbit_mask_at(depth, explored);
            covered_version = chain_version_;
        }
    }

    Status other_node(Partition& p, int depth)
    {
        tick();
        if (first_[depth].discrete) {
            if (!p.discrete())
                return Status::Exhausted;
            Perm gamma;
            gamma.img.resize(n_);
            for (int i = 0; i < n_; ++i)
                gamma.img[first_leaf_[i]] = p.elems[i];
            if (!rel_.preserves(gamma))
                return Status::Exhausted;
            ++autos_;
            if (chain_->add_generator(gamma))
                ++chain_version_;
            return Status::FoundAuto;
        }
        int cs = first_[depth].cell_start;
        // structures match when hashes do; cheap guard against hash collision
        if (p.discrete() || p.cell_of[p.elems[cs]] != cs ||
            p.cell_size[cs] != first_[depth].cell_size)
            return Status::Exhausted;

        std::vector<int> candidates = p.cell_members(cs);
        std::sort(candidates.begin(), candidates.end());
        for (int w : candidates) {
            Partition child = p;
            std::vector<int> wl;
            child.individualize(w, wl);
            std::uint64_t ch = refiner_.refine(child, std::move(wl));
            if (ch != first_[depth + 1].hash)
                continue;
            if (other_node(child, depth + 1) == Status::FoundAuto)
                return Status::FoundAuto; // backjump to the leftmost-path ancestor
        }
        return Status::Exhausted;
    }

    const Rel& rel_;
    int n_;
    AutOptions opt_;
    Refiner<Rel> refiner_;
    std::vector<PathInfo> first_;
    std::vector<int> first_path_;
    std::vector<std::int32_t> first_leaf_;
    std::unique_ptr<StabChain> chain_;
    int chain_version_ = 0;
    std::int64_t nodes_ = 0, autos_ = 0;
    std::chrono::steady_clock::time_point deadline_;
};

/// Full automorphism group of a graph. Every returned generator is verified
/// to preserve adjacency.
inline AutResult automorphism_group(const Graph& g, const AutOptions& opt = {})
{
    if (g.n() > opt.max_n)
        throw BoundExceededError("graph too large for automorphism search (n = " +
                                 std::to_string(g.n()) + ", bound " + std::to_string(opt.max_n) +
                                 ")");
    GraphRelation rel(g);
    AutSearcher<GraphRelation> searcher(rel, opt);
    AutResult r = searcher.run();
    for (const Perm& gen : r.group.generators())
        if (!rel.preserves(gen))
            throw CheckFailedError("internal: emitted generator is not an automorphism");
    return r;
}

/// Group of permutations preserving every color class of a symmetric
/// edge-coloring given as an n*n matrix with entries in [0, ncolors).
inline AutResult color_automorphism_group(int n, const std::vector<std::uint16_t>& colors,
                                          int ncolors, const AutOptions& opt = {})
{
    if (n > std::min(opt.max_n, 256))
        throw BoundExceededError("coloring too large for color automorphism search");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (colors[std::size_t(u) * n + v] != colors[std::size_t(v) * n + u])
                throw InvalidParamsError("color matrix must be symmetric");
    ColorRelation rel(n, colors, ncolors);
    AutSearcher<ColorRelation> searcher(rel, opt);
    AutResult r = searcher.run();
    for (const Perm& gen : r.group.generators())
        if (!rel.preserves(gen))
            throw CheckFailedError("internal: emitted generator does not preserve the coloring");
    return r;
}

} // namespace gpaley
