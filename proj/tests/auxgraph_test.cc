#include <digdom/auxgraph.hh>
#include <digdom/families.hh>

#include <doctest.h>

#include <algorithm>

using namespace digdom;

namespace
{
    auto path(std::size_t n) -> UndirectedGraph
    {
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.push_back({v, v + 1});
        return UndirectedGraph(n, edges);
    }

    auto cycle(std::size_t n) -> UndirectedGraph
    {
        std::vector<Edge> edges;
        for (Vertex v = 0; v < n; ++v)
            edges.push_back({v, (v + 1) % n});
        return UndirectedGraph(n, edges);
    }
}

TEST_SUITE("auxgraph")
{
    TEST_CASE("closed in-neighbourhood graph")
    {
        CHECK(closed_in_neighbourhood_graph(build_digraph(2, {{0, 1}})).edge_count() == 1);
        CHECK(closed_in_neighbourhood_graph(gen_arcless(2)).edge_count() == 0);
        CHECK(closed_in_neighbourhood_graph(gen_fig1_G()).edge_count() == 3);
    }

    TEST_CASE("open in-neighbourhood graph")
    {
        auto fork = build_digraph(3, {{2, 0}, {2, 1}});
        auto g = open_in_neighbourhood_graph(fork);
        CHECK(g.adjacent(0, 1));
        CHECK(g.edge_count() == 1);
        CHECK(open_in_neighbourhood_graph(build_digraph(2, {{0, 1}})).edge_count() == 0);
        CHECK(open_in_neighbourhood_graph(gen_oriented_cycle(5)).edge_count() == 0);
    }

    TEST_CASE("square of a graph")
    {
        auto sq = closed_neighbourhood_graph(path(4));
        CHECK(sq.edge_count() == 5);
        CHECK(sq.adjacent(0, 2));
        CHECK(sq.adjacent(1, 3));
        CHECK_FALSE(sq.adjacent(0, 3));
        CHECK(closed_neighbourhood_graph(UndirectedGraph(4, {})).edge_count() == 0);
        auto star = UndirectedGraph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
        CHECK(closed_neighbourhood_graph(star).edge_count() == 6);
    }

    TEST_CASE("complement")
    {
        CHECK(complement(path(4)).edge_count() == 3);
        CHECK(complement(complement(cycle(5))) == cycle(5));
    }

    TEST_CASE("chordality")
    {
        auto c4 = is_chordal(cycle(4));
        CHECK_FALSE(c4.chordal);
        CHECK(c4.chordless_cycle.size() == 4);
        CHECK(is_chordless_cycle(cycle(4), c4.chordless_cycle));

        auto p = is_chordal(path(6));
        CHECK(p.chordal);
        CHECK(is_perfect_elimination_order(path(6), p.elimination_order));

        auto c6 = is_chordal(cycle(6));
        CHECK_FALSE(c6.chordal);
        CHECK(is_chordless_cycle(cycle(6), c6.chordless_cycle));

        CHECK(is_chordal(UndirectedGraph{}).chordal);
    }

    TEST_CASE("chordality agrees with cycle search on random graphs")
    {
        // A graph is chordal iff no induced cycle of length 4 or more exists; for
        // small orders check that against exhaustive vertex subsets.
        Rng rng(3);
        for (int i = 0; i < 300; ++i) {
            std::size_t n = 1 + rng.below(7);
            double p = rng.unit();
            std::vector<Edge> edges;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng.unit() < p)
                        edges.push_back({u, v});
            UndirectedGraph g(n, edges);

            bool has_hole = false;
            for (std::uint32_t mask = 0; mask < (1u << n) && ! has_hole; ++mask) {
                if (std::popcount(mask) < 4)
                    continue;
                // Induced subgraph is a cycle iff connected and 2-regular.
                std::vector<Vertex> members;
                for (Vertex v = 0; v < n; ++v)
                    if (mask >> v & 1)
                        members.push_back(v);
                bool regular = std::ranges::all_of(members, [&](Vertex v) {
                    int deg = 0;
                    for (Vertex w : members)
                        deg += g.adjacent(v, w);
                    return deg == 2;
                });
                if (! regular)
                    continue;
                std::uint32_t reached = 1u << members[0], frontier = reached;
                while (frontier) {
                    std::uint32_t next = 0;
                    for (Vertex v : members)
                        if (frontier >> v & 1)
                            for (Vertex w : members)
                                if (g.adjacent(v, w))
                                    next |= 1u << w;
                    frontier = next & ~reached;
                    reached |= next;
                }
                has_hole = reached == mask;
            }

            auto r = is_chordal(g);
            CHECK(r.chordal == ! has_hole);
            if (r.chordal)
                CHECK(is_perfect_elimination_order(g, r.elimination_order));
            else
                CHECK(is_chordless_cycle(g, r.chordless_cycle));
        }
    }

    TEST_CASE("maximal cliques")
    {
        std::vector<Edge> k4;
        for (Vertex u = 0; u < 4; ++u)
            for (Vertex v = u + 1; v < 4; ++v)
                k4.push_back({u, v});
        auto cliques = maximal_cliques(UndirectedGraph(4, k4));
        CHECK(cliques.size() == 1);
        CHECK(cliques[0].count() == 4);

        auto p3 = maximal_cliques(path(3));
        CHECK(p3.size() == 2);

        auto tri = maximal_cliques(closed_in_neighbourhood_graph(gen_fig1_G()));
        CHECK(tri.size() == 1);
        CHECK(tri[0].count() == 3);

        CHECK_THROWS_AS(maximal_cliques(UndirectedGraph(5, {}), 2), CliqueLimitExceeded);
    }

    TEST_CASE("Helly lemmas")
    {
        Rng rng(5);
        for (int i = 0; i < 50; ++i) {
            auto t = random_ditree(2 + rng.below(12), rng);
            CHECK(check_closed_helly_lemma(t).verdict == Verdict::holds);
            auto open = check_open_helly_lemma(t);
            if (min_in_degree(t) >= 1)
                CHECK(open.verdict == Verdict::holds);
            else
                CHECK_FALSE(open.hypotheses_met);
        }

        CHECK(check_closed_helly_lemma(gen_arcless(1)).verdict == Verdict::holds);

        auto bic4 = build_digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}});
        auto r = check_closed_helly_lemma(bic4);
        CHECK_FALSE(r.hypotheses_met);
        CHECK(r.verdict != Verdict::timeout);

        auto fork = build_digraph(3, {{2, 0}, {2, 1}, {0, 2}});
        auto open = check_open_helly_lemma(fork);
        CHECK(open.verdict == Verdict::holds);
    }
}
