#include <digdom/families.hh>
#include <digdom/products.hh>

#include <doctest.h>

using namespace digdom;

TEST_SUITE("products")
{
    TEST_CASE("vertex map")
    {
        ProductVertexMap map(3, 5);
        CHECK(map.order() == 15);
        CHECK(map.flat(2, 4) == 14);
        CHECK(map.pair(7) == std::pair<Vertex, Vertex>{1, 2});
        CHECK(map.right_fiber(1).to_vector() == std::vector<Vertex>{5, 6, 7, 8, 9});
        CHECK(map.left_fiber(2).to_vector() == std::vector<Vertex>{2, 7, 12});
    }

    TEST_CASE("Cartesian product of fig1G and fig1H")
    {
        auto p = cartesian_product(gen_fig1_G(), gen_fig1_H());
        CHECK(p.digraph.order() == 15);
        // 3 copies of H's 6 arcs plus 5 copies of the triangle's 3.
        CHECK(p.digraph.arc_count() == 33);
        CHECK(p.digraph.label(p.map.flat(0, 1)) == "(a,v)");

        for (Vertex h = 0; h < 5; ++h)
            CHECK(induced_subdigraph(p.digraph, p.map.left_fiber(h)).arc_count() == 3);
    }

    TEST_CASE("Cartesian product with K1 is a copy")
    {
        auto h = gen_fig1_H();
        auto p = cartesian_product(gen_arcless(1), h);
        CHECK(build_digraph(p.digraph.order(), p.digraph.arcs()) == h);
    }

    TEST_CASE("K1* box P4")
    {
        auto p = cartesian_product(gen_K1_star(), gen_bidirected_path(4));
        CHECK(p.digraph.order() == 28);
        CHECK(p.digraph.arc_count() == 7 * 6 + 4 * 8);
    }

    TEST_CASE("direct products")
    {
        auto p = direct_product(gen_oriented_cycle(3), gen_oriented_cycle(3));
        CHECK(p.digraph.order() == 9);
        CHECK(p.digraph.arc_count() == 9);
        for (Vertex h = 0; h < 3; ++h)
            CHECK(induced_subdigraph(p.digraph, p.map.left_fiber(h)).arc_count() == 0);

        CHECK(direct_product(gen_fig1_H(), gen_arcless(4)).digraph.arc_count() == 0);
    }

    TEST_CASE("arc count identities on random factors")
    {
        Rng rng(11);
        for (int i = 0; i < 100; ++i) {
            auto g = random_digraph(1 + rng.below(7), rng.unit(), rng);
            auto h = random_digraph(1 + rng.below(7), rng.unit(), rng);
            auto cart = cartesian_product(g, h);
            auto direct = direct_product(g, h);
            CHECK(cart.digraph.arc_count() == g.order() * h.arc_count() + h.order() * g.arc_count());
            CHECK(direct.digraph.arc_count() == g.arc_count() * h.arc_count());
            for (Vertex x = 0; x < cart.digraph.order(); ++x)
                for (Vertex y = 0; y < cart.digraph.order(); ++y) {
                    auto [g1, h1] = cart.map.pair(x);
                    auto [g2, h2] = cart.map.pair(y);
                    bool expected = (g1 == g2 && h.has_arc(h1, h2)) || (h1 == h2 && g.has_arc(g1, g2));
                    CHECK(cart.digraph.has_arc(x, y) == expected);
                    CHECK(direct.digraph.has_arc(x, y) == (g.has_arc(g1, g2) && h.has_arc(h1, h2)));
                }
        }
    }

    TEST_CASE("product sets")
    {
        ProductVertexMap map(3, 3);
        std::vector<std::pair<Vertex, Vertex>> pairs{{0, 0}, {2, 1}};
        CHECK(product_set(map, pairs).to_vector() == std::vector<Vertex>{0, 7});
    }
}
