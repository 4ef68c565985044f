#ifndef DIGDOM_PRODUCTS_HH
#define DIGDOM_PRODUCTS_HH

#include <digdom/digraph.hh>

#include <string>
#include <utility>

namespace digdom
{
    /// Row-major bijection (g, h) <-> g * n_H + h between factor pairs and product vertices.
    class ProductVertexMap
    {
    public:
        ProductVertexMap() = default;
        ProductVertexMap(std::size_t left_order, std::size_t right_order) : _left(left_order), _right(right_order) {}

        auto left_order() const -> std::size_t { return _left; }
        auto right_order() const -> std::size_t { return _right; }
        auto order() const -> std::size_t { return _left * _right; }

        auto flat(Vertex g, Vertex h) const -> Vertex { return g * _right + h; }
        auto pair(Vertex flat_index) const -> std::pair<Vertex, Vertex> { return {flat_index / _right, flat_index % _right}; }

        /// The G-fiber G^h, i.e. {(g, h) : g in V(G)}.
        auto left_fiber(Vertex h) const -> VertexSet;
        /// The H-fiber ^gH, i.e. {(g, h) : h in V(H)}.
        auto right_fiber(Vertex g) const -> VertexSet;

    private:
        std::size_t _left = 0, _right = 0;
    };

    struct Product
    {
        Digraph digraph;
        ProductVertexMap map;
    };

    /// G □ H. Vertex labels are "(g,h)" built from the factor labels.
    auto cartesian_product(const Digraph & g, const Digraph & h) -> Product;

    /// G × H.
    auto direct_product(const Digraph & g, const Digraph & h) -> Product;

    /// Subdigraph induced by a vertex set, renumbered in increasing order.
    auto induced_subdigraph(const Digraph & d, const VertexSet & vertices) -> Digraph;

    /// Embed a set of (g, h) pairs as a product vertex set.
    auto product_set(const ProductVertexMap & map, std::span<const std::pair<Vertex, Vertex>> pairs) -> VertexSet;
}

#endif
