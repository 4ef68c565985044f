#include <digdom/families.hh>
#include <digdom/validate.hh>
#include <digdom/verify.hh>

#include <doctest.h>

#include <set>
#include <sstream>

using namespace digdom;

namespace
{
    auto path_graph(std::size_t n) -> UndirectedGraph
    {
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.push_back({v, v + 1});
        return UndirectedGraph(n, edges);
    }
}

TEST_SUITE("verify")
{
    TEST_CASE("tree equalities hold exhaustively at n = 4")
    {
        std::size_t holds = 0, open_holds = 0, open_skipped = 0;
        for_each_ditree(4, [&](const Digraph & t) {
            auto r = check_packing_equals_domination(t, arc_spec(t));
            holds += r.verdict == Verdict::holds;
            auto o = check_open_packing_equals_total_domination(t, arc_spec(t));
            open_holds += o.verdict == Verdict::holds;
            open_skipped += o.verdict == Verdict::hypothesis_not_met;
        });
        CHECK(holds == 432);
        CHECK(open_holds + open_skipped == 432);
        CHECK(open_holds > 0);
    }

    TEST_CASE("non-trees are outside the hypotheses")
    {
        auto r = check_packing_equals_domination(gen_G_m(2), "Gm:2");
        CHECK(r.verdict == Verdict::hypothesis_not_met);
        CHECK(r.lhs == 2);
        CHECK(r.rhs == 3);
        CHECK_FALSE(r.note.empty());
    }

    TEST_CASE("undirected trees")
    {
        CHECK(check_meir_moon(path_graph(7), "P7").verdict == Verdict::holds);
        Rng rng(2);
        for (int i = 0; i < 20; ++i) {
            auto t = underlying_graph(random_ditree(15, rng));
            CHECK(check_meir_moon(t, "tree").verdict == Verdict::holds);
        }
    }

    TEST_CASE("direct products of oriented cycles")
    {
        auto c3 = gen_oriented_cycle(3), c4 = gen_oriented_cycle(4);
        auto r = check_total_domination_direct_product(c3, c3, "C3 x C3");
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.lhs == 9);
        auto s = check_total_domination_direct_product(c3, c4, "C3 x C4");
        CHECK(s.verdict == Verdict::holds);
        CHECK(s.lhs == 12);
        auto arc = build_digraph(2, {{0, 1}});
        CHECK(check_total_domination_direct_product(c3, arc, "x").verdict == Verdict::hypothesis_not_met);
    }

    TEST_CASE("fig1G and fig1H break Vizing but not the bounds")
    {
        auto g = gen_fig1_G(), h = gen_fig1_H();
        auto v = check_vizing_inequality(g, h, "fig1");
        CHECK(v.verdict == Verdict::fails);
        CHECK(v.lhs == 5);
        CHECK(v.rhs == 6);
        REQUIRE(v.witnesses.count("product_dominating_set"));
        auto w = v.witnesses["product_dominating_set"];
        CHECK(is_dominating_set(cartesian_product(g, h).digraph, VertexSet(15, w)));

        CHECK(check_packing_lower_bound(g, h, "fig1").verdict == Verdict::holds);
        CHECK(check_half_vizing_bound(g, h, "fig1").verdict == Verdict::holds);
    }

    TEST_CASE("half bound is tight on the triangle")
    {
        auto t = gen_oriented_cycle(3);
        auto r = check_half_vizing_bound(t, t, "C3 box C3");
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.lhs == 3);
        CHECK(r.values["twice_slack"] == 0);
    }

    TEST_CASE("large products are bounded rather than solved")
    {
        CheckOptions options;
        options.exact_threshold = 10;
        auto h = gen_H_m(3), g = gen_fig1_G();
        auto r = check_half_vizing_bound(h, g, "H9 box G1", options, hm_triangle_witness(3));
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.values["product_exact"] == 0);
        CHECK(r.values["product_lower"] == 27);
        CHECK(r.values["product_upper"] == 27);
        CHECK(r.lhs == 27);

        CHECK_THROWS(check_half_vizing_bound(h, g, "bad", options, VertexSet(108, {0})));
    }

    TEST_CASE("G_m squares beat Vizing")
    {
        for (std::size_t m = 1; m <= 4; ++m) {
            auto r = check_Gm_vizing_failure(m);
            CHECK(r.verdict == Verdict::holds);
            CHECK(r.values["S_size"] == static_cast<long long>(m * m + 2 * m));
        }
        CHECK(check_Gm_vizing_failure(1).lhs == 3);
        CHECK(check_Gm_vizing_failure(2).lhs == 8);
    }

    TEST_CASE("C4 equality")
    {
        auto r = check_C4_equality(gen_fig5_D(), "fig5D");
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.lhs == 6);
        CHECK(r.rhs == 6);
        CHECK(check_C4_equality(gen_arcless(2), "arcless:2").verdict == Verdict::hypothesis_not_met);
    }

    TEST_CASE("strong supports")
    {
        auto k = gen_K1_star(), p4 = gen_bidirected_path(4);
        auto r = check_strong_support_condition(k, p4, "K1star | path:4", {}, k1_star_path_witness());
        CHECK(r.hypotheses_met);
        CHECK(r.values["offending_supports"] == 0);
        CHECK(r.lhs == 8);

        // A star with two leaves fed from the centre cannot attain equality.
        auto star = build_digraph(3, {{0, 1}, {0, 2}});
        auto s = check_strong_support_condition(star, gen_bidirected_path(2), "star");
        CHECK(s.hypotheses_met);
        CHECK(s.verdict == Verdict::holds);
    }

    TEST_CASE("isolated leaf extension")
    {
        auto t = attach_isolated_leaf(gen_arcless(1), 0);
        CHECK(t.order() == 2);
        CHECK(t.has_arc(1, 0));

        auto k = check_isolated_leaf_extension(gen_arcless(1), gen_arcless(1), 0, "K1 | K1 | 0");
        CHECK(k.verdict == Verdict::hypothesis_not_met);

        auto r = check_isolated_leaf_extension(gen_K1_star(), gen_bidirected_path(4), 1, "K1star | path:4 | 1");
        CHECK(r.verdict != Verdict::fails);
    }

    TEST_CASE("maximum packings of small ditrees")
    {
        auto p = gen_bidirected_path(3);
        auto r = check_max_packing_dominates(p, p, "P3 | P3");
        CHECK(r.verdict != Verdict::fails);
        CHECK_THROWS_AS(check_max_packing_dominates(gen_arcless(1), p, "K1"), std::invalid_argument);
    }

    TEST_CASE("acyclic packing records")
    {
        auto r = check_acyclic_packing(gen_C4_orientation("0202"), "C4:0202");
        CHECK(r.hypotheses_met);
        CHECK(r.lhs == 2);
        CHECK(r.rhs == 2);
        CHECK(r.verdict == Verdict::holds);
        CHECK(check_acyclic_packing(gen_fig1_G(), "fig1G").verdict == Verdict::hypothesis_not_met);

        std::size_t records = 0;
        AcyclicSearch search{3, 50, 6, 9};
        search_acyclic_problem(search, {}, [&](const VerificationRecord & rec) {
            ++records;
            CHECK(rec.claim == Claim::acyclic_packing_domination);
            CHECK(rec.hypotheses_met);
        });
        CHECK(records == 1 + 3 + 25 + 50);
    }

    TEST_CASE("arc specs rebuild their digraph")
    {
        Rng rng(6);
        for (int i = 0; i < 30; ++i) {
            auto d = random_digraph(1 + rng.below(8), rng.unit(), rng);
            CHECK(make_family(arc_spec(d)) == d);
        }
    }

    TEST_CASE("record JSON round trip")
    {
        auto r = check_vizing_inequality(gen_fig1_G(), gen_fig1_H(), "fig1G | fig1H");
        auto back = record_from_json(to_json(r));
        CHECK(back.claim == r.claim);
        CHECK(back.verdict == r.verdict);
        CHECK(back.lhs == r.lhs);
        CHECK(back.witnesses == r.witnesses);
        CHECK(back.values == r.values);
        CHECK(to_json(r, false)["elapsed_ms"] == 0);
        CHECK(to_json_line(r).find('\n') == std::string::npos);
        for (auto c : all_claims())
            CHECK(claim_from_string(to_string(c)) == c);
        CHECK_FALSE(claim_is_theorem(Claim::vizing_inequality));
        CHECK(claim_is_theorem(Claim::half_vizing_bound));
    }

    TEST_CASE("suite configuration")
    {
        auto config = parse_suite_config_text("seed = 5\ntimeout_ms = 1000\njobs = 2\n"
                                              "# comment\n"
                                              "task = packing_eq_domination ditrees:3\n"
                                              "task = vizing_inequality fig1G fig1H\n");
        CHECK(config.seed == 5);
        CHECK(config.jobs == 2);
        CHECK(config.options.timeout == std::chrono::milliseconds(1000));
        CHECK(config.tasks.size() == 2);

        CHECK_THROWS_AS(parse_suite_config_text("task = nosuch path:3\n"), SuiteConfigError);
        CHECK_THROWS_AS(parse_suite_config_text("seed five\n"), SuiteConfigError);
        CHECK_THROWS_AS(parse_suite_config_text("colour = 3\n"), SuiteConfigError);
    }

    TEST_CASE("suite runs are ordered and deterministic")
    {
        auto text = "seed = 3\n"
                    "task = packing_eq_domination ditrees:4\n"
                    "task = open_packing_eq_total_domination random-ditrees:count=40,n=9\n"
                    "task = half_vizing_bound cycle:3 cycle:3\n";
        auto run = [&](unsigned jobs) {
            auto config = parse_suite_config_text(text);
            config.jobs = jobs;
            std::vector<std::string> lines;
            auto summary = run_suite(config, [&](const VerificationRecord & r) { lines.push_back(to_json_line(r, false)); });
            return std::pair{lines, summary};
        };
        auto [one, s1] = run(1);
        auto [four, s4] = run(4);
        CHECK(one == four);
        CHECK(s1.records == 432 + 40 + 1);
        CHECK(s1.per_claim["packing_eq_domination"] == 432);
        CHECK(s1.verdicts[Verdict::holds] >= 433);
        CHECK(s1.theorem_failures == 0);
        CHECK(summary_json(s1)["records"] == 473);
    }

    TEST_CASE("default suite covers every claim and passes")
    {
        auto config = parse_suite_config_text(default_suite_text());
        std::set<Claim> claims;
        for (auto & task : config.tasks)
            claims.insert(task.claim);
        CHECK(claims.size() == all_claims().size());

        config.jobs = 2;
        std::size_t errors = 0;
        auto summary = run_suite(config, [](const VerificationRecord &) {}, [&](const std::string &) { ++errors; });
        CHECK(errors == 0);
        CHECK(summary.theorem_failures == 0);
        CHECK(summary.verdicts[Verdict::timeout] == 0);
        CHECK(summary.per_claim.size() == all_claims().size());
    }
}
