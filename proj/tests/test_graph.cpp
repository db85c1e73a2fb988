#include <catch2/catch_amalgamated.hpp>

#include "gpaley/gpaley.hpp"
#include "gpaley/graph.hpp"
#include "gpaley/group_constructions.hpp"
#include "gpaley/isomorphism.hpp"
#include "oracles.hpp"

using gpaley::Fe;
using gpaley::Field;
using gpaley::Graph;

namespace {

Graph cycle(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

} // namespace

TEST_CASE("cayley graph validation")
{
    Field f = Field::build(5, 1);
    CHECK_THROWS_AS(Graph::cayley(f, {0, 1}), gpaley::ZeroInConnectionSetError);
    CHECK_THROWS_AS(Graph::cayley(f, {1}), gpaley::NotSymmetricConnectionSetError); // -1 = 4 missing
}

TEST_CASE("GF(5), S = {1,4} gives the 5-cycle")
{
    Field f = Field::build(5, 1);
    Graph g = Graph::cayley(f, {1, 4});
    // direct edge-set check
    Graph expect = cycle(5);
    CHECK(g == expect);
}

TEST_CASE("GF(4), full connection set gives K_4")
{
    Field f = Field::build(2, 2);
    Graph g = Graph::cayley(f, {1, 2, 3});
    CHECK(g == Graph::complete(4));
}

TEST_CASE("Paley(9) is regular of valency 4")
{
    Field f = Field::build(3, 2);
    std::vector<Fe> s;
    for (int i = 0; i < 4; ++i)
        s.push_back(f.exp(2 * i));
    Graph g = Graph::cayley(f, s);
    for (int v = 0; v < g.n(); ++v)
        CHECK(g.degree(v) == 4);
    CHECK(g.edge_count() == 9 * 4 / 2);
}

TEST_CASE("cayley graphs are vertex-transitive under translations")
{
    for (auto [p, r, k] : {std::tuple<int64_t, int, int64_t>{5, 1, 2}, {3, 2, 2}, {2, 4, 5},
                           {13, 1, 3}, {3, 2, 4}}) {
        Field f = Field::build(p, r);
        auto params = gpaley::GPaleyParams::make(f, k);
        Graph g = gpaley::build_graph(params);
        for (int64_t t = 1; t < f.q(); ++t) {
            gpaley::Perm tr = gpaley::translation_map(f, static_cast<Fe>(t));
            bool ok = true;
            for (int v = 0; v < g.n() && ok; ++v)
                g.for_each_neighbor(v, [&](int u) {
                    if (!g.adjacent(tr(v), tr(u)))
                        ok = false;
                });
            CHECK(ok);
        }
    }
}

TEST_CASE("connected components")
{
    SECTION("K_4 is one part")
    {
        auto parts = Graph::complete(4).connected_components();
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].size() == 4);
    }
    SECTION("edgeless graph splits into singletons")
    {
        Graph g(6);
        CHECK(g.connected_components().size() == 6);
    }
    SECTION("GPaley(16,3) has 4 parts of size 4")
    {
        Field f = Field::build(2, 4);
        auto params = gpaley::GPaleyParams::make(f, 5);
        auto parts = gpaley::build_graph(params).connected_components();
        REQUIRE(parts.size() == 4);
        for (const auto& part : parts)
            CHECK(part.size() == 4);
    }
    SECTION("components of a Cayley graph are translates, all of equal size")
    {
        Field f = Field::build(5, 2);
        auto params = gpaley::GPaleyParams::make(f, 12);
        Graph g = gpaley::build_graph(params);
        auto parts = g.connected_components();
        REQUIRE(parts.size() == 5);
        Graph first = g.induced_subgraph(parts[0]);
        for (const auto& part : parts) {
            CHECK(part.size() == parts[0].size());
            auto iso = gpaley::is_isomorphic(first, g.induced_subgraph(part));
            CHECK(iso.has_value());
        }
    }
}

TEST_CASE("induced subgraph")
{
    Graph g = Graph::complete(5);
    SECTION("full vertex set is the identity")
    {
        CHECK(g.induced_subgraph({0, 1, 2, 3, 4}) == g);
    }
    SECTION("single vertex is K_1")
    {
        Graph k1 = g.induced_subgraph({3});
        CHECK(k1.n() == 1);
        CHECK(k1.edge_count() == 0);
    }
    SECTION("component of GPaley(16,3) containing 0 is K_4")
    {
        Field f = Field::build(2, 4);
        auto params = gpaley::GPaleyParams::make(f, 5);
        Graph gp = gpaley::build_graph(params);
        auto parts = gp.connected_components();
        auto it = std::find_if(parts.begin(), parts.end(),
                               [](const auto& part) { return part[0] == 0; });
        REQUIRE(it != parts.end());
        CHECK(gp.induced_subgraph(*it) == Graph::complete(4));
    }
    SECTION("out of range vertex")
    {
        CHECK_THROWS_AS(g.induced_subgraph({0, 5}), gpaley::OutOfRangeError);
    }
}

TEST_CASE("hamming graphs")
{
    SECTION("H(2,2) is the 4-cycle")
    {
        Graph h = Graph::hamming(2, 2);
        // direct enumeration: tuples 00,01,10,11; weight-one differences
        Graph expect(4);
        expect.add_edge(0, 1);
        expect.add_edge(0, 2);
        expect.add_edge(1, 3);
        expect.add_edge(2, 3);
        CHECK(h == expect);
        CHECK(gpaley::is_isomorphic(h, cycle(4)).has_value());
    }
    SECTION("H(3,2): 9 vertices, valency 4")
    {
        Graph h = Graph::hamming(3, 2);
        CHECK(h.n() == 9);
        for (int v = 0; v < 9; ++v)
            CHECK(h.degree(v) == 4);
    }
    SECTION("H(2,3) is the 3-cube")
    {
        Graph h = Graph::hamming(2, 3);
        Graph cube(8);
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) {
                int x = u ^ v;
                if (x && !(x & (x - 1))) // single differing bit
                    cube.add_edge(u, v);
            }
        CHECK(h == cube);
    }
    SECTION("edge count is a^b * b(a-1)/2")
    {
        for (auto [a, b] : {std::pair<int, int>{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}, {5, 2}}) {
            Graph h = Graph::hamming(a, b);
            int64_t n = 1;
            for (int i = 0; i < b; ++i)
                n *= a;
            CHECK(h.edge_count() == n * b * (a - 1) / 2);
        }
    }
    SECTION("bounds")
    {
        CHECK_THROWS_AS(Graph::hamming(1, 2), gpaley::InvalidParamsError);
        CHECK_THROWS_AS(Graph::hamming(2, 30), gpaley::BoundExceededError);
    }
}

TEST_CASE("graph6 round trip against reference encodings")
{
    // reference strings produced by networkx.to_graph6_bytes
    CHECK(Graph::complete(4).to_graph6() == "C~");
    CHECK(cycle(5).to_graph6() == "Dhc");
    Graph petersen(10);
    {
        // outer 5-cycle, inner pentagram, spokes — networkx's labeling
        for (int i = 0; i < 5; ++i) {
            petersen.add_edge(i, (i + 1) % 5);
            petersen.add_edge(5 + i, 5 + (i + 2) % 5);
            petersen.add_edge(i, 5 + i);
        }
        CHECK(petersen.to_graph6() == "IheA@GUAo");
    }
    Graph p2(2);
    p2.add_edge(0, 1);
    CHECK(p2.to_graph6() == "A_");
    CHECK(Graph::hamming(2, 2).to_graph6() == "Cr");
    CHECK(Graph::hamming(3, 2).to_graph6() == "H{S{aSf");
    CHECK(Graph::hamming(2, 3).to_graph6() == "Gr`HOk");

    // n > 62 exercises the 3-byte size form
    Graph e70(70);
    CHECK(Graph::from_graph6(e70.to_graph6()).n() == 70);
    CHECK(e70.to_graph6().substr(0, 4) == std::string{'~', '?', '@', 'E'});

    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Graph g = oracles::random_graph(17, seed);
        CHECK(Graph::from_graph6(g.to_graph6()) == g);
    }
    Graph big = oracles::random_graph(80, 7);
    CHECK(Graph::from_graph6(big.to_graph6()) == big);

    CHECK_THROWS_AS(Graph::from_graph6("C"), gpaley::FormatError);
}

TEST_CASE("isomorphism oracle")
{
    SECTION("identity accepted")
    {
        Graph g = oracles::random_graph(12, 5);
        auto iso = gpaley::is_isomorphic(g, g);
        REQUIRE(iso.has_value());
        for (int v = 0; v < g.n(); ++v)
            for (int u = 0; u < g.n(); ++u)
                CHECK(g.adjacent(u, v) == g.adjacent((*iso)[u], (*iso)[v]));
    }
    SECTION("C_5 vs K_5 differ")
    {
        CHECK_FALSE(gpaley::is_isomorphic(cycle(5), Graph::complete(5)).has_value());
    }
    SECTION("GPaley(9,4) is Hamming H(3,2)")
    {
        Field f = Field::build(3, 2);
        auto params = gpaley::GPaleyParams::make(f, 2);
        auto iso = gpaley::is_isomorphic(gpaley::build_graph(params), Graph::hamming(3, 2));
        CHECK(iso.has_value());
    }
    SECTION("relabelled graphs are isomorphic, certificate verifies")
    {
        std::uint64_t state = 99;
        for (int n : {9, 14, 20}) {
            Graph g = oracles::random_graph(n, state);
            std::vector<int> map(n);
            std::iota(map.begin(), map.end(), 0);
            for (int i = n - 1; i > 0; --i)
                std::swap(map[i], map[oracles::next_rand(state) % (i + 1)]);
            Graph h = oracles::relabel(g, map);
            auto iso = gpaley::is_isomorphic(g, h);
            REQUIRE(iso.has_value());
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    CHECK(g.adjacent(u, v) == h.adjacent((*iso)[u], (*iso)[v]));
        }
    }
    SECTION("same degree sequence, non-isomorphic pair")
    {
        // C_6 vs two triangles: both 2-regular on 6 vertices
        Graph two_triangles(6);
        for (int base : {0, 3})
            for (int i = 0; i < 3; ++i)
                two_triangles.add_edge(base + i, base + (i + 1) % 3);
        CHECK_FALSE(gpaley::is_isomorphic(cycle(6), two_triangles).has_value());
    }
    SECTION("bound enforced")
    {
        Graph a(300), b(300);
        CHECK_THROWS_AS(gpaley::is_isomorphic(a, b), gpaley::BoundExceededError);
    }
}
