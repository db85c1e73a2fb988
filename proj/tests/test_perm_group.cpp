#include <catch2/catch_amalgamated.hpp>

#include "gpaley/gpaley.hpp"
#include "gpaley/group_constructions.hpp"
#include "gpaley/perm_group.hpp"
#include "oracles.hpp"

using gpaley::BigInt;
using gpaley::Field;
using gpaley::Perm;
using gpaley::PermutationGroup;

namespace {

Perm cycle_perm(int n, std::initializer_list<int> cyc)
{
    Perm p = Perm::identity(n);
    auto it = cyc.begin();
    int first = *it;
    int prev = first;
    for (++it; it != cyc.end(); ++it) {
        p.img[prev] = *it;
        prev = *it;
    }
    p.img[prev] = first;
    return p;
}

} // namespace

TEST_CASE("order: trivial and cyclic groups")
{
    CHECK(PermutationGroup::trivial(5).order() == 1);
    PermutationGroup c7(7, {cycle_perm(7, {0, 1, 2, 3, 4, 5, 6})});
    CHECK(c7.order() == 7);
}

TEST_CASE("order matches brute-force enumeration on a fixture corpus")
{
    struct Fixture {
        int degree;
        std::vector<Perm> gens;
    };
    std::vector<Fixture> fixtures;
    // S_5 = <(0 1), (0 1 2 3 4)>
    fixtures.push_back({5, {cycle_perm(5, {0, 1}), cycle_perm(5, {0, 1, 2, 3, 4})}});
    // A_4 = <(0 1 2), (1 2 3)>
    fixtures.push_back({4, {cycle_perm(4, {0, 1, 2}), cycle_perm(4, {1, 2, 3})}});
    // D_8 on 8 points
    fixtures.push_back({8, {cycle_perm(8, {0, 1, 2, 3, 4, 5, 6, 7}),
                            Perm({7, 6, 5, 4, 3, 2, 1, 0})}});
    // S_6 = <(0 1), (0 1 2 3 4 5)>
    fixtures.push_back({6, {cycle_perm(6, {0, 1}), cycle_perm(6, {0, 1, 2, 3, 4, 5})}});
    // S_4 x <(4 5)> on 6 points
    fixtures.push_back({6, {cycle_perm(6, {0, 1}), cycle_perm(6, {0, 1, 2, 3}),
                            cycle_perm(6, {4, 5})}});
    // intransitive product of two cycles
    fixtures.push_back({9, {cycle_perm(9, {0, 1, 2, 3}), cycle_perm(9, {4, 5, 6, 7, 8})}});
    // PGL(2,5)-ish: the sharply 3-transitive action on 6 points, order 120
    fixtures.push_back({6, {cycle_perm(6, {0, 1, 2, 3, 4}), cycle_perm(6, {0, 5}),
                            cycle_perm(6, {1, 2, 4, 3})}});

    for (const auto& fx : fixtures) {
        PermutationGroup g(fx.degree, fx.gens);
        CHECK(g.order() == oracles::brute_group_order(fx.degree, fx.gens));
    }
}

TEST_CASE("membership")
{
    PermutationGroup s5(5, {cycle_perm(5, {0, 1}), cycle_perm(5, {0, 1, 2, 3, 4})});
    CHECK(s5.contains(Perm::identity(5)));
    for (const Perm& g : s5.generators())
        CHECK(s5.contains(g));

    // odd permutation vs A_5: parity oracle
    PermutationGroup a5(5, {cycle_perm(5, {0, 1, 2}), cycle_perm(5, {0, 1, 2, 3, 4})});
    CHECK(a5.order() == 60);
    CHECK_FALSE(a5.contains(cycle_perm(5, {0, 1})));
    CHECK(a5.contains(cycle_perm(5, {0, 1}).then(cycle_perm(5, {2, 3}))));

    CHECK_THROWS_AS(a5.contains(Perm::identity(4)), gpaley::DegreeMismatchError);
}

TEST_CASE("every element of the BSGS-enumerated group sifts as a member")
{
    std::vector<Perm> gens{cycle_perm(7, {0, 1, 2}), cycle_perm(7, {2, 3}),
                           cycle_perm(7, {4, 5, 6})};
    PermutationGroup g(7, gens);
    auto elements = oracles::brute_group_elements(7, gens);
    CHECK(g.order() == static_cast<long>(elements.size()));
    for (const Perm& e : elements)
        CHECK(g.contains(e));
}

TEST_CASE("stabilizer order and explicit stabilizer")
{
    SECTION("regular group has trivial stabilizers")
    {
        PermutationGroup c7(7, {cycle_perm(7, {0, 1, 2, 3, 4, 5, 6})});
        for (int v = 0; v < 7; ++v)
            CHECK(c7.stabilizer_order(v) == 1);
    }
    SECTION("S_5 point stabilizer has order 24")
    {
        PermutationGroup s5(5, {cycle_perm(5, {0, 1}), cycle_perm(5, {0, 1, 2, 3, 4})});
        for (int v = 0; v < 5; ++v) {
            CHECK(s5.stabilizer_order(v) == 24);
            PermutationGroup stab = s5.stabilizer(v);
            CHECK(stab.order() == 24);
            for (const Perm& g : stab.generators())
                CHECK(g(v) == v);
        }
    }
    SECTION("orbit-stabilizer identity across a fixture")
    {
        PermutationGroup g(9, {cycle_perm(9, {0, 1, 2, 3}), cycle_perm(9, {4, 5, 6, 7, 8}),
                               cycle_perm(9, {0, 4})});
        for (int v = 0; v < 9; ++v)
            CHECK(g.order() ==
                  g.stabilizer_order(v) * static_cast<long>(g.orbit(v).size()));
    }
}

TEST_CASE("transitivity and primitivity")
{
    SECTION("cyclic of prime degree: transitive and primitive")
    {
        PermutationGroup c7(7, {cycle_perm(7, {0, 1, 2, 3, 4, 5, 6})});
        CHECK(c7.is_transitive());
        CHECK(c7.is_primitive());
    }
    SECTION("cyclic of degree 4 is imprimitive (block {0,2})")
    {
        PermutationGroup c4(4, {cycle_perm(4, {0, 1, 2, 3})});
        CHECK(c4.is_transitive());
        CHECK_FALSE(c4.is_primitive());
    }
    SECTION("intransitive group raises on primitivity")
    {
        PermutationGroup g(5, {cycle_perm(5, {0, 1, 2})});
        CHECK_FALSE(g.is_transitive());
        CHECK_THROWS_AS(g.is_primitive(), gpaley::NotTransitiveError);
    }
    SECTION("S_5 is primitive")
    {
        PermutationGroup s5(5, {cycle_perm(5, {0, 1}), cycle_perm(5, {0, 1, 2, 3, 4})});
        CHECK(s5.is_primitive());
    }
    SECTION("S_3 wr S_2 in imprimitive action on 6 points")
    {
        PermutationGroup g(6, {cycle_perm(6, {0, 1, 2}), cycle_perm(6, {0, 1}),
                               Perm({3, 4, 5, 0, 1, 2})});
        CHECK(g.is_transitive());
        CHECK_FALSE(g.is_primitive());
    }
}

TEST_CASE("normalizes")
{
    PermutationGroup s4(4, {cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})});
    SECTION("a group normalizes itself")
    {
        CHECK(s4.normalizes(s4));
    }
    SECTION("index-2 subgroups are normal")
    {
        PermutationGroup a4(4, {cycle_perm(4, {0, 1, 2}), cycle_perm(4, {1, 2, 3})});
        CHECK(s4.normalizes(a4));
        // S_3 inside S_4 is not normal
        PermutationGroup s3(4, {cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2})});
        CHECK_FALSE(s4.normalizes(s3));
    }
    SECTION("point stabilizer of S_3 normalizes <(0 1 2)>")
    {
        PermutationGroup s3(3, {cycle_perm(3, {0, 1}), cycle_perm(3, {0, 1, 2})});
        PermutationGroup c3(3, {cycle_perm(3, {0, 1, 2})});
        CHECK(s3.normalizes(c3)); // index 2
        CHECK(s3.stabilizer(0).normalizes(c3));
    }
}

TEST_CASE("normal closure finds A_4 inside S_4")
{
    PermutationGroup s4(4, {cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})});
    PermutationGroup closure = s4.normal_closure({cycle_perm(4, {0, 1, 2})});
    CHECK(closure.order() == 12);
    CHECK(s4.normalizes(closure));
}

TEST_CASE("translations are regular")
{
    for (auto [p, r] : {std::pair<int64_t, int>{5, 1}, {3, 2}, {2, 4}}) {
        Field f = Field::build(p, r);
        PermutationGroup t = gpaley::translations(f);
        CHECK(t.order() == f.q());
        CHECK(t.is_transitive());
        for (int v = 0; v < t.degree(); ++v)
            CHECK(t.stabilizer_order(v) == 1);
    }
}

TEST_CASE("AGammaL(1,q) orders")
{
    CHECK(gpaley::agl_one(Field::build(3, 2)).order() == 144);   // 9*8*2
    CHECK(gpaley::agl_one(Field::build(3, 4)).order() == 25920); // Example: |AGammaL(1,81)|
    CHECK(gpaley::agl_one(Field::build(5, 1)).order() == 20);
    CHECK(gpaley::agl_one(Field::build(2, 2)).order() == 24);    // = S_4 on 4 points
}

TEST_CASE("affine subgroup T x| <w^k, alpha>")
{
    SECTION("k = q-1, R = 1: only translations")
    {
        Field f = Field::build(7, 1);
        PermutationGroup g = gpaley::affine_generators(f, 6);
        CHECK(g.order() == 7);
    }
    SECTION("(q,k) = (13,3): order 52")
    {
        Field f = Field::build(13, 1);
        CHECK(gpaley::affine_generators(f, 3).order() == 52);
    }
    SECTION("(q,k) = (81,4): order 6480")
    {
        Field f = Field::build(3, 4);
        CHECK(gpaley::affine_generators(f, 4).order() == 6480);
    }
}

TEST_CASE("wreath product in product action")
{
    SECTION("S_2 wr S_2 is D_4, the automorphism group of the 4-cycle")
    {
        PermutationGroup g = gpaley::wreath_product_action(2, 2);
        CHECK(g.order() == 8);
        CHECK(g.order() == oracles::brute_group_order(4, g.generators()));
    }
    SECTION("S_3 wr S_2 has order 72")
    {
        PermutationGroup g = gpaley::wreath_product_action(3, 2);
        CHECK(g.order() == 72);
        CHECK(g.order() == oracles::brute_group_order(9, g.generators()));
    }
    SECTION("order is (a!)^b b! across small cases")
    {
        for (auto [a, b] : {std::pair<int, int>{2, 3}, {3, 3}, {4, 2}, {5, 2}, {2, 2}}) {
            PermutationGroup g = gpaley::wreath_product_action(a, b);
            CHECK(g.order() == gpaley::wreath_order(a, b));
        }
    }
    SECTION("preserves the Hamming graph")
    {
        for (auto [a, b] : {std::pair<int, int>{3, 2}, {2, 3}, {4, 2}}) {
            gpaley::Graph h = gpaley::Graph::hamming(a, b);
            for (const Perm& g : gpaley::wreath_product_action(a, b).generators()) {
                bool ok = true;
                for (int v = 0; v < h.n() && ok; ++v)
                    h.for_each_neighbor(v, [&](int u) {
                        if (!h.adjacent(g(v), g(u)))
                            ok = false;
                    });
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("affine group preserves the graph and is arc-transitive")
{
    for (auto [p, r, k] : {std::tuple<int64_t, int, int64_t>{13, 1, 3}, {3, 2, 2}, {3, 2, 4},
                           {2, 4, 5}, {5, 2, 4}}) {
        Field f = Field::build(p, r);
        auto params = gpaley::GPaleyParams::make(f, k);
        gpaley::Graph graph = gpaley::build_graph(params);
        PermutationGroup g = gpaley::affine_generators(f, k);

        // every generator maps edges to edges
        for (const Perm& gen : g.generators()) {
            bool ok = true;
            for (int v = 0; v < graph.n() && ok; ++v)
                graph.for_each_neighbor(v, [&](int u) {
                    if (!graph.adjacent(gen(v), gen(u)))
                        ok = false;
                });
            CHECK(ok);
        }

        // the orbit of the arc (0, 1) covers all q * (q-1)/k arcs
        std::set<std::pair<int, int>> arcs{{0, static_cast<int>(f.one())}};
        std::vector<std::pair<int, int>> queue(arcs.begin(), arcs.end());
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            for (const Perm& gen : g.generators()) {
                auto next = std::make_pair(gen(x), gen(y));
                if (arcs.insert(next).second)
                    queue.push_back(next);
            }
        }
        CHECK(static_cast<int64_t>(arcs.size()) == f.q() * params.valency());
    }
}
