#include <digdom/families.hh>
#include <digdom/oracle.hh>
#include <digdom/solvers.hh>
#include <digdom/validate.hh>

#include <doctest.h>

#include <set>

using namespace digdom;

TEST_SUITE("families")
{
    TEST_CASE("rng ranges")
    {
        Rng a(1), b(1);
        for (int i = 0; i < 100; ++i)
            CHECK(a.next() == b.next());
        Rng r(2);
        for (int i = 0; i < 1000; ++i) {
            CHECK(r.below(7) < 7);
            double u = r.unit();
            CHECK(u >= 0.0);
            CHECK(u < 1.0);
        }
    }

    TEST_CASE("G_m")
    {
        for (std::size_t m = 1; m <= 4; ++m) {
            auto g = gen_G_m(m);
            CHECK(g.order() == 2 * m + 1);
            CHECK(brute_force_invariant(g, Invariant::gamma) == m + 1);
            CHECK(brute_force_invariant(g, Invariant::rho) == m);
        }
    }

    TEST_CASE("H_m")
    {
        auto h = gen_H_m(3);
        CHECK(h.order() == 36);
        // 9 triangle arcs per group of three, 9 arcs into the d's, 9 arcs out of them.
        CHECK(h.arc_count() == 27 + 27 + 9);
        CHECK_THROWS(gen_H_m(2));
    }

    TEST_CASE("C4 orientations")
    {
        std::set<std::multiset<std::size_t>> degree_sequences;
        for (std::string variant : {"0211", "0121", "0202", "1111"}) {
            auto c = gen_C4_orientation(variant);
            CHECK(c.arc_count() == 4);
            std::vector<std::size_t> outs;
            for (Vertex v = 0; v < 4; ++v)
                outs.push_back(c.out_degree(v));
            CHECK(outs == std::vector<std::size_t>{std::size_t(variant[0] - '0'), std::size_t(variant[1] - '0'),
                               std::size_t(variant[2] - '0'), std::size_t(variant[3] - '0')});
            CHECK(brute_force_invariant(c, Invariant::gamma) == 2);
            CHECK(brute_force_invariant(c, Invariant::rho) == 2);
        }
        auto c = gen_C4_orientation("0202");
        CHECK(c.out_degree(c4_u) == 2);
        CHECK(c.out_degree(c4_v) == 2);
        CHECK_THROWS(gen_C4_orientation("2020x"));
    }

    TEST_CASE("K1* and T*")
    {
        auto k = gen_K1_star();
        CHECK(k.order() == 7);
        CHECK(brute_force_invariant(k, Invariant::gamma) == 4);
        CHECK(k.label(k1_star_x) == "x");

        for (auto t : {gen_arcless(1), gen_bidirected_path(2), gen_bidirected_path(3)}) {
            auto star = gen_T_star(t);
            CHECK(star.order() == 7 * t.order());
            CHECK(is_ditree(star));
            CHECK(domination_number(star).value() == 4 * t.order());
        }
    }

    TEST_CASE("fig1 and fig5 digraphs")
    {
        CHECK(gen_fig1_H().arc_count() == 6);
        CHECK(gen_fig1_H().label(4) == "z");
        auto d = gen_fig5_D();
        CHECK(d.order() == 6);
        CHECK(brute_force_invariant(d, Invariant::gamma) == 3);
        CHECK(is_dominating_set(cartesian_product(gen_fig1_G(), gen_fig1_H()).digraph, fig1_witness()));
    }

    TEST_CASE("constructed witnesses dominate")
    {
        for (std::size_t m = 1; m <= 6; ++m) {
            auto g = gen_G_m(m);
            auto s = gm_square_witness(m);
            CHECK(s.count() == m * m + 2 * m);
            CHECK(is_dominating_set(cartesian_product(g, g).digraph, s));
        }
        for (std::size_t k = 3; k <= 4; ++k) {
            auto p = cartesian_product(gen_H_m(k), gen_fig1_G());
            auto s = hm_triangle_witness(k);
            CHECK(s.count() == 9 * k);
            CHECK(is_dominating_set(p.digraph, s));
        }
        auto kp = cartesian_product(gen_K1_star(), gen_bidirected_path(4));
        CHECK(k1_star_path_witness().count() == 8);
        CHECK(is_dominating_set(kp.digraph, k1_star_path_witness()));
    }

    TEST_CASE("Pruefer decoding")
    {
        auto edges = prufer_decode(4, {3, 3});
        CHECK(edges.size() == 3);
        for (auto [u, v] : edges)
            CHECK((u == 3 || v == 3));
        CHECK(prufer_decode(2, {}).size() == 1);
        CHECK(prufer_decode(1, {}).empty());

        // Every sequence gives a distinct tree.
        std::set<std::vector<Edge>> trees;
        for (Vertex a = 0; a < 5; ++a)
            for (Vertex b = 0; b < 5; ++b)
                for (Vertex c = 0; c < 5; ++c) {
                    auto e = prufer_decode(5, {a, b, c});
                    for (auto & [u, v] : e)
                        if (u > v)
                            std::swap(u, v);
                    std::ranges::sort(e);
                    CHECK(is_tree(UndirectedGraph(5, e)));
                    trees.insert(e);
                }
        CHECK(trees.size() == 125);
    }

    TEST_CASE("random generators")
    {
        Rng rng(17);
        for (int i = 0; i < 100; ++i) {
            auto t = random_ditree(1 + rng.below(20), rng);
            CHECK(is_ditree(t));
            auto dag = random_dag(1 + rng.below(12), rng.unit(), rng);
            CHECK(is_acyclic_digraph(dag));
        }
        CHECK(random_ditree(10, 5) == random_ditree(10, 5));
        CHECK(random_digraph(8, 0.0, rng).arc_count() == 0);
        CHECK(random_digraph(8, 1.0, rng).arc_count() == 56);
        auto oneway = random_ditree(12, 3, {1, 0, 0});
        CHECK(oneway.arc_count() == 11);
        auto both = random_ditree(12, 3, {0, 0, 1});
        CHECK(both.arc_count() == 22);
    }

    TEST_CASE("exhaustive enumerations")
    {
        CHECK(ditree_count(2) == 3);
        CHECK(ditree_count(3) == 27);
        CHECK(ditree_count(4) == 432);
        CHECK(ditree_count(5) == 10125);
        for (std::size_t n = 1; n <= 5; ++n) {
            std::set<std::uint64_t> seen;
            std::size_t count = 0;
            for_each_ditree(n, [&](const Digraph & t) {
                ++count;
                seen.insert(t.fingerprint());
                CHECK(is_ditree(t));
            });
            CHECK(count == ditree_count(n));
            CHECK(seen.size() == count);
        }
        CHECK_THROWS(enumerate_ditrees(7));

        std::size_t digraphs = 0;
        for_each_digraph(3, [&](const Digraph &) { ++digraphs; });
        CHECK(digraphs == 64);

        // Labelled DAG counts: 1, 3, 25, 543.
        std::vector<std::size_t> dag_counts;
        for (std::size_t n = 1; n <= 4; ++n) {
            std::size_t c = 0;
            for_each_dag(n, [&](const Digraph & d) {
                ++c;
                CHECK(is_acyclic_digraph(d));
            });
            dag_counts.push_back(c);
        }
        CHECK(dag_counts == std::vector<std::size_t>{1, 3, 25, 543});
    }

    TEST_CASE("family specs")
    {
        CHECK(make_family("Gm:3") == gen_G_m(3));
        CHECK(make_family("cycle:5") == gen_oriented_cycle(5));
        CHECK(make_family("C4:0202") == gen_C4_orientation("0202"));
        CHECK(make_family("K1star") == gen_K1_star());
        CHECK(make_family("Tstar:path:2") == gen_T_star(gen_bidirected_path(2)));
        CHECK(make_family("arcs:3:0>1,1=2") == build_digraph(3, {{0, 1}, {1, 2}, {2, 1}}));
        CHECK(make_family("corona:ff/dii") == gen_fig5_D());
        CHECK(make_family("ditree:n=6,seed=42,w=1/1/1") == random_ditree(6, 42));

        for (std::string text : {"Gm:3", "Hm:3", "C4:0211", "path:4", "arcless:3", "fig1H", "Tstar:K1star",
                 "corona:fb/dio", "ditree:n=6,seed=42,w=1/2/3", "digraph:n=5,seed=1,p=0.25", "dag:n=5,seed=2,p=0.5"}) {
            auto spec = parse_family_spec(text);
            CHECK(make_family(parse_family_spec(to_string(spec))) == make_family(spec));
        }

        CHECK_THROWS_AS(parse_family_spec("nosuch:3"), FamilySpecError);
        CHECK_THROWS_AS(parse_family_spec("Gm:x"), FamilySpecError);
        CHECK_THROWS_AS(parse_family_spec("ditree:seed=5"), FamilySpecError);
        CHECK_THROWS_AS(make_family("arcs:2:0>0"), GraphError);
    }
}
