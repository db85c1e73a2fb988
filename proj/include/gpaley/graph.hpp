#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gpaley/errors.hpp"
#include "gpaley/finite_field.hpp"

namespace gpaley {

/// Undirected simple graph on vertices 0..n-1 as a symmetric adjacency bit
/// matrix. Row AND/popcount is the hot operation in the automorphism search,
/// hence the dense representation.
class Graph {
public:
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

    int n() const { return n_; }
    int words() const { return words_; }

    void add_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw OutOfRangeError("edge endpoint out of range");
        if (u == v)
            throw InvalidParamsError("loops are not allowed");
        bits_[std::size_t(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[std::size_t(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    bool adjacent(int u, int v) const
    {
        return (bits_[std::size_t(u) * words_ + v / 64] >> (v % 64)) & 1;
    }

    const std::uint64_t* row(int v) const { return bits_.data() + std::size_t(v) * words_; }

    int degree(int v) const
    {
        int d = 0;
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w)
            d += std::popcount(r[w]);
        return d;
    }

    int64_t edge_count() const
    {
        int64_t total = 0;
        for (int v = 0; v < n_; ++v)
            total += degree(v);
        return total / 2;
    }

    template <class F>
    void for_each_neighbor(int v, F&& f) const
    {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    /// Cayley graph of the additive group of `f` with connection set `s`:
    /// {x, y} is an edge iff x - y is in s. Requires 0 not in s and s = -s.
    static Graph cayley(const Field& f, const std::vector<Fe>& s)
    {
        std::vector<char> in_s(f.q(), 0);
        for (Fe e : s) {
            if (e == 0)
                throw ZeroInConnectionSetError("connection set contains 0");
            in_s[e] = 1;
        }
        for (Fe e : s)
            if (!in_s[f.neg(e)])
                throw NotSymmetricConnectionSetError("connection set is not symmetric (S != -S)");
        Graph g(static_cast<int>(f.q()));
        for (int64_t x = 0; x < f.q(); ++x)
            for (Fe e : s) {
                Fe y = f.add(static_cast<Fe>(x), e);
                if (static_cast<int64_t>(y) > x)
                    g.add_edge(static_cast<int>(x), static_cast<int>(y));
                // the mirror pair (y, x) is added when the loop reaches x' = y, e' = -e
            }
        return g;
    }

    static Graph complete(int n)
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    /// Hamming graph H(a, b): vertices are the b-tuples over {0..a-1} in
    /// lexicographic order (first entry most significant), adjacent iff they
    /// differ in exactly one entry.
    static Graph hamming(int a, int b, int64_t max_vertices = int64_t{1} << 20)
    {
        if (a < 2 || b < 2)
            throw InvalidParamsError("hamming graph needs a >= 2 and b >= 2");
        int64_t n = 1;
        for (int i = 0; i < b; ++i) {
            n *= a;
            if (n > max_vertices)
                throw BoundExceededError("a^b exceeds vertex bound");
        }
        Graph g(static_cast<int>(n));
        // place value of coordinate j
        std::vector<int64_t> place(b);
        place[b - 1] = 1;
        for (int j = b - 2; j >= 0; --j)
            place[j] = place[j + 1] * a;
        for (int64_t v = 0; v < n; ++v)
            for (int j = 0; j < b; ++j) {
                int64_t digit = (v / place[j]) % a;
                for (int64_t d = digit + 1; d < a; ++d)
                    g.add_edge(static_cast<int>(v), static_cast<int>(v + (d - digit) * place[j]));
            }
        return g;
    }

    /// Partition of the vertices into connected components, each sorted, in
    /// order of smallest member.
    std::vector<std::vector<int>> connected_components() const
    {
        std::vector<char> seen(n_, 0);
        std::vector<std::vector<int>> parts;
        std::vector<int> queue;
        for (int s = 0; s < n_; ++s) {
            if (seen[s])
                continue;
            queue.assign(1, s);
            seen[s] = 1;
            std::vector<int> part;
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                part.push_back(v);
                for_each_neighbor(v, [&](int u) {
                    if (!seen[u]) {
                        seen[u] = 1;
                        queue.push_back(u);
                    }
                });
            }
            std::sort(part.begin(), part.end());
            parts.push_back(std::move(part));
        }
        return parts;
    }

    bool connected() const { return n_ <= 1 || connected_components().size() == 1; }

    /// Subgraph induced on the given vertex set, relabelled 0..|set|-1 in
    /// ascending vertex order.
    Graph induced_subgraph(std::vector<int> vertices) const
    {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        for (int v : vertices)
            if (v < 0 || v >= n_)
                throw OutOfRangeError("induced subgraph vertex out of range");
        Graph g(static_cast<int>(vertices.size()));
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (adjacent(vertices[i], vertices[j]))
                    g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    /// graph6 encoding (bit-exact per the published format, no trailing newline).
    std::string to_graph6() const
    {
        std::string out;
        if (n_ <= 62) {
            out.push_back(static_cast<char>(n_ + 63));
        } else if (n_ <= 258047) {
            out.push_back(126);
            out.push_back(static_cast<char>(((n_ >> 12) & 63) + 63));
            out.push_back(static_cast<char>(((n_ >> 6) & 63) + 63));
            out.push_back(static_cast<char>((n_ & 63) + 63));
        } else {
            throw BoundExceededError("graph6 export limited to n <= 258047");
        }
        int buf = 0, nbits = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) {
                buf = (buf << 1) | (adjacent(i, j) ? 1 : 0);
                if (++nbits == 6) {
                    out.push_back(static_cast<char>(buf + 63));
                    buf = 0;
                    nbits = 0;
                }
            }
        if (nbits > 0)
            out.push_back(static_cast<char>((buf << (6 - nbits)) + 63));
        return out;
    }

    static Graph from_graph6(const std::string& s)
    {
        std::size_t pos = 0;
        auto next = [&]() -> int {
            if (pos >= s.size())
                throw FormatError("graph6 string truncated");
            int c = static_cast<unsigned char>(s[pos++]);
            if (c < 63 || c > 126)
                throw FormatError("graph6 byte out of range");
            return c - 63;
        };
        int64_t n;
        int c0 = next();
        if (c0 < 63) {
            n = c0;
        } else {
            int a = next(), b = next(), c = next();
            if (a == 63) // >> 258047 vertices uses an 8-byte form we do not accept
                throw BoundExceededError("graph6 import limited to n <= 258047");
            n = (int64_t(a) << 12) | (int64_t(b) << 6) | c;
        }
        Graph g(static_cast<int>(n));
        int buf = 0, nbits = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if (nbits == 0) {
                    buf = next();
                    nbits = 6;
                }
                if ((buf >> (nbits - 1)) & 1)
                    g.add_edge(i, j);
                --nbits;
            }
        return g;
    }

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

} // namespace gpaley
