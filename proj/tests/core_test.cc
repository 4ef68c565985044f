#include <digdom/arc_list.hh>
#include <digdom/digraph.hh>
#include <digdom/families.hh>
#include <digdom/vertex_set.hh>

#include <doctest.h>

#include <sstream>

using namespace digdom;

TEST_SUITE("core")
{
    TEST_CASE("vertex sets")
    {
        VertexSet s(130, {0, 64, 129});
        CHECK(s.count() == 3);
        CHECK(s.test(64));
        CHECK_FALSE(s.test(63));
        CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});
        CHECK(s.next(1) == 64);
        CHECK(s.next(130) == 130);

        VertexSet t(130, {64, 100});
        CHECK((s & t).to_vector() == std::vector<Vertex>{64});
        CHECK((s | t).count() == 4);
        CHECK((s - t).to_vector() == std::vector<Vertex>{0, 129});
        CHECK(s.intersects(t));
        CHECK(s.intersection_count(t) == 1);
        CHECK(VertexSet(130, {64}).is_subset_of(s));
        CHECK(VertexSet::full(130).count() == 130);

        std::vector<Vertex> seen(s.begin(), s.end());
        CHECK(seen == s.to_vector());
    }

    TEST_CASE("construction")
    {
        auto triangle = build_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
        CHECK(triangle.order() == 3);
        CHECK(triangle.arc_count() == 3);
        CHECK(triangle == gen_fig1_G());

        CHECK(build_digraph(1, {}).arc_count() == 0);
        CHECK(build_digraph(2, {{0, 1}, {0, 1}}).arc_count() == 1);

        CHECK_THROWS_AS(build_digraph(2, {{1, 1}}), GraphError);
        CHECK_THROWS_AS(build_digraph(2, {{0, 2}}), GraphError);
        CHECK_THROWS_AS(gen_arcless(max_vertices + 1), CapacityError);
    }

    TEST_CASE("neighbourhoods")
    {
        auto g = gen_fig1_G();
        CHECK(g.closed_out_neighbours(0).to_vector() == std::vector<Vertex>{0, 1});
        CHECK(g.closed_in_neighbours(0).to_vector() == std::vector<Vertex>{0, 2});

        auto single = gen_arcless(1);
        CHECK(single.closed_out_neighbours(0).to_vector() == std::vector<Vertex>{0});
        CHECK(single.out_neighbours(0).empty());

        auto p4 = gen_bidirected_path(4);
        CHECK(p4.closed_out_neighbours(1).to_vector() == std::vector<Vertex>{0, 1, 2});

        // Closed out and in rows meet in v, and together give the underlying closed neighbourhood.
        auto h = gen_fig1_H();
        auto u = underlying_graph(h);
        for (Vertex v = 0; v < h.order(); ++v) {
            CHECK((h.closed_out_neighbours(v) & h.closed_in_neighbours(v)).test(v));
            CHECK((h.closed_out_neighbours(v) | h.closed_in_neighbours(v)) == u.closed_neighbours(v));
        }
    }

    TEST_CASE("degrees")
    {
        auto c5 = gen_oriented_cycle(5);
        CHECK(min_in_degree(c5) == 1);
        CHECK(max_out_degree(c5) == 1);

        // v1 receives an arc from each v_{2i} and v_{2i+1}; everyone else has in-degree 1.
        auto g3 = gen_G_m(3);
        CHECK(g3.in_degree(0) == 3);
        CHECK(min_in_degree(g3) == 1);
        CHECK(max_out_degree(g3) == 3);
        CHECK(underlying_graph(g3).edge_count() == 9);

        CHECK(min_in_degree(gen_arcless(1)) == 0);
        CHECK(min_in_degree(Digraph{}) == 0);
    }

    TEST_CASE("underlying graph and girth")
    {
        auto k3 = underlying_graph(gen_fig1_G());
        CHECK(k3.edge_count() == 3);
        CHECK(girth(k3) == 3);

        auto both = build_digraph(2, {{0, 1}, {1, 0}});
        CHECK(underlying_graph(both).edge_count() == 1);

        CHECK_FALSE(girth(underlying_graph(gen_bidirected_path(4))));
        CHECK(girth(underlying_graph(gen_C4_orientation("1111"))) == 4);
    }

    TEST_CASE("ditrees and acyclicity")
    {
        CHECK(is_ditree(gen_K1_star()));
        CHECK_FALSE(is_ditree(gen_fig1_G()));
        CHECK_FALSE(is_acyclic_digraph(gen_fig1_G()));
        CHECK(is_acyclic_digraph(gen_C4_orientation("0202")));
        CHECK_FALSE(is_acyclic_digraph(gen_C4_orientation("1111")));
        CHECK(is_ditree(gen_fig5_D()));
        CHECK_FALSE(is_ditree(gen_arcless(2)));
        CHECK(is_ditree(gen_arcless(1)));
    }

    TEST_CASE("leaf classification")
    {
        auto k = gen_K1_star();
        auto tags = classify_leaves(k);
        // a and a' have no in-neighbour.
        CHECK((tags[0] & tag_isolated_leaf));
        CHECK((tags[6] & tag_isolated_leaf));
        CHECK((tags[1] & tag_support));
        CHECK_FALSE((tags[k1_star_x] & tag_leaf));

        auto d = gen_fig5_D();
        auto dt = classify_leaves(d);
        for (Vertex leaf : {3, 4, 5})
            CHECK((dt[leaf] & tag_non_isolated_leaf));

        auto arc = build_digraph(2, {{0, 1}});
        auto at = classify_leaves(arc);
        CHECK((at[0] & tag_isolated_leaf));
        CHECK((at[1] & tag_non_isolated_leaf));
    }

    TEST_CASE("arc list round trip")
    {
        Rng rng(7);
        for (int i = 0; i < 50; ++i) {
            auto d = random_digraph(1 + rng.below(12), rng.unit(), rng);
            auto back = parse_arc_list(format_arc_list(d));
            CHECK(back == d);
            CHECK(back.fingerprint() == d.fingerprint());
        }

        auto d = parse_arc_list("# comment\n\nn 3\n0 1 # trailing\n1 2\n");
        CHECK(d.arc_count() == 2);
    }

    TEST_CASE("arc list errors carry line numbers")
    {
        auto line_of = [](const std::string & text) -> std::size_t {
            try {
                parse_arc_list(text);
            }
            catch (const ParseError & e) {
                return e.line();
            }
            return 0;
        };
        CHECK(line_of("n 3\n0 1\n1 1\n") == 3);
        CHECK(line_of("n 3\n0 5\n") == 2);
        CHECK(line_of("3\n") == 1);
        CHECK(line_of("n 2\n0 x\n") == 2);
        CHECK(line_of("") == 1);
    }

    TEST_CASE("fingerprints")
    {
        CHECK(gen_fig1_G().fingerprint() == build_digraph(3, {{2, 0}, {1, 2}, {0, 1}}).fingerprint());
        CHECK(gen_fig1_G().fingerprint() != gen_oriented_cycle(4).fingerprint());
        CHECK(inline_instance_id(gen_fig1_G()).rfind("digraph:n=3,h=", 0) == 0);
    }
}
