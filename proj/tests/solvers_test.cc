#include <digdom/auxgraph.hh>
#include <digdom/families.hh>
#include <digdom/oracle.hh>
#include <digdom/solvers.hh>
#include <digdom/validate.hh>

#include <doctest.h>

using namespace digdom;

namespace
{
    auto undirected_path(std::size_t n) -> UndirectedGraph
    {
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.push_back({v, v + 1});
        return UndirectedGraph(n, edges);
    }

    auto bidirected(const UndirectedGraph & g) -> Digraph
    {
        std::vector<Arc> arcs;
        for (auto [u, v] : g.edges()) {
            arcs.push_back({u, v});
            arcs.push_back({v, u});
        }
        return build_digraph(g.order(), arcs);
    }
}

TEST_SUITE("solvers")
{
    TEST_CASE("set cover")
    {
        std::vector<VertexSet> sets{{3, {0, 1}}, {3, {1, 2}}, {3, {2}}};
        auto r = min_set_cover(3, sets);
        CHECK(r.solved());
        CHECK(r.size() == 2);
        CHECK(r.chosen.front() == 0);

        std::vector<VertexSet> one{{4, {0, 1, 2, 3}}, {4, {0}}};
        CHECK(min_set_cover(4, one).size() == 1);

        std::vector<VertexSet> gap{{3, {0, 1}}};
        CHECK(min_set_cover(3, gap).status == SolveStatus::infeasible);

        CHECK(min_set_cover(0, std::vector<VertexSet>{}).size() == 0);
    }

    TEST_CASE("set cover on random instances against subset enumeration")
    {
        Rng rng(21);
        for (int i = 0; i < 200; ++i) {
            std::size_t n = 1 + rng.below(10), m = 1 + rng.below(8);
            std::vector<VertexSet> sets;
            for (std::size_t j = 0; j < m; ++j) {
                VertexSet s(n);
                for (Vertex v = 0; v < n; ++v)
                    if (rng.unit() < 0.35)
                        s.set(v);
                sets.push_back(s);
            }
            std::size_t best = m + 1;
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                VertexSet u(n);
                for (std::size_t j = 0; j < m; ++j)
                    if (mask >> j & 1)
                        u |= sets[j];
                if (u.count() == n)
                    best = std::min<std::size_t>(best, std::popcount(mask));
            }
            auto r = min_set_cover(n, sets);
            if (best > m)
                CHECK(r.status == SolveStatus::infeasible);
            else {
                REQUIRE(r.solved());
                CHECK(r.size() == best);
                VertexSet u(n);
                for (auto j : r.chosen)
                    u |= sets[j];
                CHECK(u.count() == n);
            }
        }
    }

    TEST_CASE("independent sets")
    {
        CHECK(max_independent_set(UndirectedGraph(5, {})).value() == 5);
        std::vector<Edge> k5;
        for (Vertex u = 0; u < 5; ++u)
            for (Vertex v = u + 1; v < 5; ++v)
                k5.push_back({u, v});
        CHECK(max_independent_set(UndirectedGraph(5, k5)).value() == 1);
        CHECK(max_independent_set(closed_in_neighbourhood_graph(gen_G_m(3))).value() == 3);

        auto all = all_maximum_independent_sets(undirected_path(4));
        CHECK(all.alpha == 2);
        CHECK(all.sets.size() == 3);
        auto capped = all_maximum_independent_sets(undirected_path(4), 2);
        CHECK(capped.truncated);
        CHECK(capped.sets.size() == 2);
    }

    TEST_CASE("independent sets on random graphs against complement cliques")
    {
        Rng rng(8);
        for (int i = 0; i < 100; ++i) {
            std::size_t n = 1 + rng.below(14);
            double p = rng.unit();
            std::vector<Edge> edges;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng.unit() < p)
                        edges.push_back({u, v});
            UndirectedGraph g(n, edges);
            std::size_t omega = 0;
            for (auto & k : maximal_cliques(complement(g)))
                omega = std::max(omega, k.count());
            auto s = max_independent_set(g);
            CHECK(s.value() == omega);
            CHECK(is_independent_set(g, s.witness));
            auto all = all_maximum_independent_sets(g);
            CHECK(all.alpha == omega);
            for (auto & set : all.sets)
                CHECK(is_independent_set(g, set));
        }
    }

    TEST_CASE("invariants of fig1G, fig1H and G_m")
    {
        CHECK(domination_number(gen_fig1_G()).value() == 2);
        CHECK(domination_number(gen_fig1_H()).value() == 3);
        for (std::size_t m = 1; m <= 4; ++m) {
            CHECK(domination_number(gen_G_m(m)).value() == m + 1);
            CHECK(packing_number(gen_G_m(m)).value() == m);
        }
        CHECK(domination_number(gen_arcless(6)).value() == 6);
        CHECK(packing_number(gen_arcless(6)).value() == 6);
        CHECK(open_packing_number(gen_arcless(6)).value() == 6);
        CHECK(packing_number(gen_C4_orientation("0202")).value() == 2);
    }

    TEST_CASE("total domination")
    {
        for (std::size_t n = 3; n <= 8; ++n) {
            auto c = gen_oriented_cycle(n);
            CHECK(total_domination_number(c)->value() == n);
            CHECK(open_packing_number(c).value() == n);
        }
        CHECK_FALSE(total_domination_number(build_digraph(2, {{0, 1}})));
        auto c33 = direct_product(gen_oriented_cycle(3), gen_oriented_cycle(3)).digraph;
        CHECK(total_domination_number(c33)->value() == 9);
    }

    TEST_CASE("undirected domination and 2-packing")
    {
        auto p4 = undirected_path(4);
        CHECK(undirected_domination_number(p4).value() == 2);
        CHECK(two_packing_number(p4).value() == 2);
        auto star = UndirectedGraph(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        CHECK(undirected_domination_number(star).value() == 1);
        CHECK(two_packing_number(star).value() == 1);

        Rng rng(12);
        for (int i = 0; i < 20; ++i) {
            auto t = underlying_graph(random_ditree(12, rng));
            auto s = undirected_domination_number(t);
            CHECK(is_undirected_dominating_set(t, s.witness));
            auto p = two_packing_number(t);
            CHECK(is_two_packing(t, p.witness));
            CHECK(s.value() == p.value());
            // A symmetric digraph carries the same values.
            CHECK(domination_number(bidirected(t)).value() == s.value());
        }
    }

    TEST_CASE("solvers agree with the oracle on random digraphs")
    {
        Rng rng(99);
        for (int i = 0; i < 300; ++i) {
            auto d = random_digraph(5 + rng.below(3), 0.05 + 0.9 * rng.unit(), rng);
            auto report = compute_invariants(d, "random");
            CHECK(report.gamma.value() == brute_force_invariant(d, Invariant::gamma));
            CHECK(report.rho.value() == brute_force_invariant(d, Invariant::rho));
            CHECK(report.rho_open.value() == brute_force_invariant(d, Invariant::rho_open));
            auto gt = brute_force_invariant(d, Invariant::gamma_t);
            CHECK(report.gamma_t.has_value() == gt.has_value());
            if (gt)
                CHECK(report.gamma_t->value() == *gt);
            CHECK(is_dominating_set(d, report.gamma.witness));
            CHECK(is_packing(d, report.rho.witness));
            CHECK(is_open_packing(d, report.rho_open.witness));
            CHECK(report.rho.value() <= report.gamma.value());
        }
    }

    TEST_CASE("oracle basics")
    {
        CHECK(brute_force_invariant(gen_fig1_G(), Invariant::gamma) == 2);
        CHECK(brute_force_invariant(gen_arcless(3), Invariant::rho) == 3);
        CHECK_FALSE(brute_force_invariant(gen_arcless(3), Invariant::gamma_t));
        CHECK_THROWS_AS(brute_force_invariant(gen_arcless(25), Invariant::gamma), CapacityError);
        CHECK(invariant_from_string(to_string(Invariant::rho_open)) == Invariant::rho_open);
    }

    TEST_CASE("partition into two dominating sets")
    {
        auto d = gen_fig5_D();
        auto p = partition_two_dominating_sets(d, true);
        REQUIRE(p.status == SolveStatus::optimal);
        CHECK(p.first.to_vector() == std::vector<Vertex>{0, 2, 4});
        CHECK(p.second.to_vector() == std::vector<Vertex>{1, 3, 5});

        auto isolated = build_digraph(3, {{0, 1}, {1, 0}});
        CHECK(partition_two_dominating_sets(isolated, false).status == SolveStatus::infeasible);

        // A corona with bidirected pendant arcs: leaves on one side, the base on the other.
        auto corona = make_family("corona:ff/ddd");
        auto c = partition_two_dominating_sets(corona, true);
        REQUIRE(c.status == SolveStatus::optimal);
        VertexSet leaves(6, {3, 4, 5});
        CHECK((c.first == leaves || c.second == leaves));
    }

    TEST_CASE("timeouts are distinct from optima")
    {
        Rng rng(4);
        auto d = random_digraph(150, 0.03, rng);
        auto s = domination_number(d, SolveOptions{std::chrono::milliseconds(1)});
        CHECK(s.status == SolveStatus::timeout);
        CHECK(is_dominating_set(d, s.witness));
    }

    TEST_CASE("invariant report JSON")
    {
        auto d = gen_fig1_G();
        auto j = to_json(compute_invariants(d, "fig1G"), d, false);
        CHECK(j["gamma"]["value"] == 2);
        CHECK(j["gamma"]["status"] == "optimal");
        CHECK(j["gamma"]["elapsed_ms"] == 0);
        CHECK(j["gamma"]["witness_labels"].size() == 2);
        CHECK(j["gamma_t"]["value"] == 3);

        auto arc = build_digraph(2, {{0, 1}});
        CHECK(to_json(compute_invariants(arc, "arc"), arc)["gamma_t"].is_null());
    }
}
