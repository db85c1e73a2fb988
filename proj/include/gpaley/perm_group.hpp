#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpaley/errors.hpp"
#include "gpaley/permutation.hpp"

namespace gpaley {

/// Group orders routinely exceed 64 bits here (imprimitive wreath products on
/// a hundred points), so orders are exact big integers.
using BigInt = boost::multiprecision::cpp_int;

/// Base and strong generating set via deterministic (non-randomised)
/// Schreier–Sims. Base points are chosen as the smallest moved point when not
/// prescribed; an explicit base prefix can be supplied so that stabilizers of
/// chosen points (e.g. the individualization path of the automorphism search)
/// fall out of the chain directly.
class StabChain {
public:
    explicit StabChain(int degree, std::vector<int> base_prefix = {})
        : n_(degree), base_(std::move(base_prefix))
    {
        by_level_.resize(base_.size());
        orbits_.resize(base_.size());
        for (std::size_t l = 0; l < base_.size(); ++l)
            recompute_orbit(static_cast<int>(l));
    }

    int degree() const { return n_; }
    const std::vector<int>& base() const { return base_; }

    void insert_generators(const std::vector<Perm>& gens)
    {
        for (const Perm& g : gens) {
            if (g.degree() != n_)
                throw DegreeMismatchError("generator degree mismatch");
            if (!g.is_valid())
                throw InvalidParamsError("generator is not a permutation");
            if (g.is_identity())
                continue;
            place_strong_generator(g);
        }
        complete_from(static_cast<int>(base_.size()) - 1);
    }

    /// Sift g; if it is not already in the group, add its residue as a strong
    /// generator and repair the chain. Returns true if the group grew.
    bool add_generator(const Perm& g)
    {
        if (g.degree() != n_)
            throw DegreeMismatchError("generator degree mismatch");
        auto [r, level] = sift(g, 0);
        (void)level;
        if (r.is_identity())
            return false;
        int placed = place_strong_generator(r);
        complete_from(placed);
        return true;
    }

    bool contains(const Perm& g) const
    {
        if (g.degree() != n_)
            throw DegreeMismatchError("degree mismatch in membership test");
        auto [r, level] = sift(g, 0);
        (void)level;
        return r.is_identity();
    }

    BigInt order() const
    {
        BigInt o = 1;
        for (const auto& orb : orbits_)
            o *= static_cast<long>(orb.points.size());
        return o;
    }

    int levels() const { return static_cast<int>(base_.size()); }

    /// All strong generators fixing base[0..level) pointwise.
    std::vector<Perm> strong_generators_at(int level) const
    {
        std::vector<Perm> out;
        for (std::size_t j = level; j < by_level_.size(); ++j)
            out.insert(out.end(), by_level_[j].begin(), by_level_[j].end());
        return out;
    }

    /// Orbit of the points in `seed` under the strong generators at `level`,
    /// as a membership mask.
    std::vector<char> orbit_mask_at(int level, const std::vector<int>& seed) const
    {
        std::vector<char> mask(n_, 0);
        std::vector<int> queue;
        for (int s : seed)
            if (!mask[s]) {
                mask[s] = 1;
                queue.push_back(s);
            }
        auto gens = strong_generators_at(level);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (const Perm& g : gens) {
                int u = g(v);
                if (!mask[u]) {
                    mask[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        return mask;
    }

private:
    struct Orbit {
        std::vector<int> points;            // discovery order, points[0] = base point
        std::vector<std::int32_t> prev;     // BFS predecessor, -1 root, -2 absent
        std::vector<std::int32_t> gen_level; // generator used to reach the point
        std::vector<std::int32_t> gen_index;
    };

    // gens fixing base[0..j) and moving base[j]
    std::vector<std::vector<Perm>> by_level_;
    std::vector<Orbit> orbits_;
    std::vector<int> base_;
    int n_;

    /// Place a nontrivial strong generator at the level whose base prefix it
    /// fixes, extending the base when it fixes every current base point.
    /// Returns the level.
    int place_strong_generator(const Perm& g)
    {
        std::size_t j = 0;
        while (j < base_.size() && g(base_[j]) == base_[j])
            ++j;
        if (j == base_.size()) {
            base_.push_back(g.first_moved());
            by_level_.emplace_back();
            orbits_.emplace_back();
            recompute_orbit(static_cast<int>(j));
        }
        by_level_[j].push_back(g);
        return static_cast<int>(j);
    }

    void recompute_orbit(int l)
    {
        Orbit& orb = orbits_[l];
        orb.points.clear();
        orb.prev.assign(n_, -2);
        orb.gen_level.assign(n_, -1);
        orb.gen_index.assign(n_, -1);
        int beta = base_[l];
        orb.prev[beta] = -1;
        orb.points.push_back(beta);
        for (std::size_t head = 0; head < orb.points.size(); ++head) {
            int v = orb.points[head];
            for (std::size_t j = l; j < by_level_.size(); ++j)
                for (std::size_t i = 0; i < by_level_[j].size(); ++i) {
                    int u = by_level_[j][i](v);
                    if (orb.prev[u] == -2) {
                        orb.prev[u] = v;
                        orb.gen_level[u] = static_cast<std::int32_t>(j);
                        orb.gen_index[u] = static_cast<std::int32_t>(i);
                        orb.points.push_back(u);
                    }
                }
        }
    }

    /// Transversal element mapping base[l] to `point` (which must be in the
    /// level-l orbit), rebuilt from the Schreier vector.
    Perm transversal(int l, int point) const
    {
        const Orbit& orb = orbits_[l];
        std::vector<std::pair<int, int>> chain; // (gen_level, gen_index) along the path
        int v = point;
        while (orb.prev[v] != -1) {
            chain.emplace_back(orb.gen_level[v], orb.gen_index[v]);
            v = orb.prev[v];
        }
        Perm t = Perm::identity(n_);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            t = t.then(by_level_[it->first][it->second]);
        return t;
    }

    /// Sift g through levels >= from. Returns the residue and the level at
    /// which sifting stopped (= #levels when it ran off the end).
    std::pair<Perm, int> sift(Perm g, int from) const
    {
        for (std::size_t l = from; l < base_.size(); ++l) {
            int gamma = g(base_[l]);
            if (gamma == base_[l])
                continue;
            if (orbits_[l].prev[gamma] == -2)
                return {std::move(g), static_cast<int>(l)};
            g = g.then(transversal(static_cast<int>(l), gamma).inverse());
        }
        return {std::move(g), static_cast<int>(base_.size())};
    }

    /// Textbook Schreier–Sims completion: verify levels from deepest to
    /// shallowest; a failing Schreier generator adds a residue at a deeper
    /// level and verification jumps back down.
    void complete_from(int start)
    {
        int l = std::min<int>(start, static_cast<int>(base_.size()) - 1);
        while (l >= 0) {
            recompute_orbit(l);
            bool dirty = false;
            const Orbit& orb = orbits_[l];
            for (std::size_t pi = 0; pi < orb.points.size() && !dirty; ++pi) {
                int gamma = orb.points[pi];
                Perm u = transversal(l, gamma);
                for (std::size_t j = l; j < by_level_.size() && !dirty; ++j)
                    for (std::size_t i = 0; i < by_level_[j].size() && !dirty; ++i) {
                        const Perm& x = by_level_[j][i];
                        Perm s = u.then(x);
                        int gx = s(base_[l]);
                        Perm schreier = s.then(transversal(l, gx).inverse());
                        auto [r, stop] = sift(std::move(schreier), l + 1);
                        (void)stop;
                        if (!r.is_identity()) {
                            int placed = place_strong_generator(r);
                            l = placed;
                            dirty = true;
                        }
                    }
            }
            if (!dirty)
                --l;
        }
        // orbits at all levels are current: every level above a dirty jump is
        // recomputed on the way back up
    }
};

/// A permutation group given by generators, with a lazily built BSGS backing
/// order/membership/stabilizer queries. Immutable after construction; the
/// first query that needs the chain builds it (construction is not
/// synchronised — serialise first use across threads).
class PermutationGroup {
public:
    PermutationGroup(int degree, std::vector<Perm> generators)
        : degree_(degree), gens_(std::move(generators))
    {
        for (const Perm& g : gens_) {
            if (g.degree() != degree_)
                throw DegreeMismatchError("generator degree mismatch");
            if (!g.is_valid())
                throw InvalidParamsError("generator is not a permutation");
        }
    }

    static PermutationGroup trivial(int degree) { return PermutationGroup(degree, {}); }

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    BigInt order() const { return chain().order(); }

    bool contains(const Perm& g) const { return chain().contains(g); }

    bool is_trivial() const { return order() == 1; }

    std::vector<int> orbit(int point) const
    {
        std::vector<char> seen(degree_, 0);
        std::vector<int> out{point};
        seen[point] = 1;
        for (std::size_t h = 0; h < out.size(); ++h)
            for (const Perm& g : gens_) {
                int u = g(out[h]);
                if (!seen[u]) {
                    seen[u] = 1;
                    out.push_back(u);
                }
            }
        return out;
    }

    bool is_transitive() const
    {
        return degree_ == 0 || static_cast<int>(orbit(0).size()) == degree_;
    }

    /// Orbit–stabilizer: |G| / |point^G|.
    BigInt stabilizer_order(int point) const
    {
        return order() / static_cast<long>(orbit(point).size());
    }

    /// The stabilizer of a point as an explicit group (a chain is built with
    /// that point as first base point; its level-1 strong generators generate
    /// the stabilizer).
    PermutationGroup stabilizer(int point) const
    {
        StabChain c(degree_, {point});
        c.insert_generators(gens_);
        return PermutationGroup(degree_, c.strong_generators_at(1));
    }

    /// Primitivity via minimal block systems: for every point w != 0, grow the
    /// smallest G-congruence identifying 0 and w; the group is primitive iff
    /// every such congruence is the universal one. Requires transitivity.
    bool is_primitive() const
    {
        if (!is_transitive())
            throw NotTransitiveError("primitivity is defined for transitive groups only");
        if (degree_ <= 2)
            return true;
        for (int w = 1; w < degree_; ++w)
            if (!minimal_block_is_trivial(0, w))
                return false;
        return true;
    }

    /// True iff every conjugate of a generator of h by a generator of this
    /// group lies in h (sufficient since h carries a BSGS).
    bool normalizes(const PermutationGroup& h) const
    {
        if (h.degree() != degree_)
            throw DegreeMismatchError("normalizes: degree mismatch");
        for (const Perm& x : gens_) {
            Perm xinv = x.inverse();
            for (const Perm& t : h.gens_) {
                if (!h.contains(xinv.then(t).then(x)))
                    return false;
            }
        }
        return true;
    }

    /// Normal closure of <seeds> in this group.
    PermutationGroup normal_closure(const std::vector<Perm>& seeds) const
    {
        StabChain c(degree_);
        std::vector<Perm> members = seeds;
        c.insert_generators(seeds);
        std::vector<Perm> work = seeds;
        while (!work.empty()) {
            Perm s = std::move(work.back());
            work.pop_back();
            for (const Perm& x : gens_) {
                Perm conj = x.inverse().then(s).then(x);
                if (!c.contains(conj)) {
                    c.add_generator(conj);
                    members.push_back(conj);
                    work.push_back(conj);
                }
            }
        }
        return PermutationGroup(degree_, members);
    }

    /// Access to the lazily built chain (for callers needing transversal-level
    /// queries).
    const StabChain& chain() const
    {
        if (!chain_) {
            auto c = std::make_unique<StabChain>(degree_);
            c->insert_generators(gens_);
            chain_ = std::move(c);
        }
        return *chain_;
    }

    /// Adopt a prebuilt chain for this generator set (used by the
    /// automorphism search, which already has one).
    void adopt_chain(std::unique_ptr<StabChain> c) const { chain_ = std::move(c); }

private:
    bool minimal_block_is_trivial(int a, int b) const
    {
        // union-find closure of the congruence generated by a ~ b
        std::vector<int> parent(degree_);
        for (int i = 0; i < degree_; ++i)
            parent[i] = i;
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        std::vector<std::pair<int, int>> queue{{a, b}};
        parent[find(b)] = find(a);
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            for (const Perm& g : gens_) {
                int gx = find(g(x)), gy = find(g(y));
                if (gx != gy) {
                    parent[gx] = gy;
                    queue.emplace_back(gx, gy);
                }
            }
        }
        // For transitive G the congruence classes are blocks of equal size;
        // more than one class means the class of `a` is a nontrivial block.
        int root = find(0);
        for (int v = 1; v < degree_; ++v)
            if (find(v) != root)
                return false;
        return true; // congruence collapsed everything: only the full-set block
    }

    int degree_;
    std::vector<Perm> gens_;
    mutable std::unique_ptr<StabChain> chain_;
};

} // namespace gpaley
