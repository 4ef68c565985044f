#include <digdom/products.hh>

using namespace digdom;

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto product_map_for(const Digraph & g, const Digraph & h) -> ProductVertexMap
    {
        if (g.order() == 0 || h.order() == 0)
            throw GraphError("product factors must be nonempty");
        if (g.order() > max_vertices / h.order())
            throw CapacityError("product of orders " + to_string(g.order()) + " and " + to_string(h.order()) +
                " exceeds capacity " + to_string(max_vertices));
        return {g.order(), h.order()};
    }

    auto product_labels(const Digraph & g, const Digraph & h) -> vector<string>
    {
        vector<string> labels;
        labels.reserve(g.order() * h.order());
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = 0; b < h.order(); ++b)
                labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
        return labels;
    }
}

auto ProductVertexMap::left_fiber(Vertex h) const -> VertexSet
{
    if (h >= _right)
        throw std::out_of_range("fiber index " + to_string(h) + " outside the right factor");
    VertexSet result(order());
    for (Vertex g = 0; g < _left; ++g)
        result.set(flat(g, h));
    return result;
}

auto ProductVertexMap::right_fiber(Vertex g) const -> VertexSet
{
    if (g >= _left)
        throw std::out_of_range("fiber index " + to_string(g) + " outside the left factor");
    VertexSet result(order());
    for (Vertex h = 0; h < _right; ++h)
        result.set(flat(g, h));
    return result;
}

auto digdom::cartesian_product(const Digraph & g, const Digraph & h) -> Product
{
    auto map = product_map_for(g, h);
    vector<Arc> arcs;
    arcs.reserve(g.order() * h.arc_count() + h.order() * g.arc_count());
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [b1, b2] : h.arcs())
            arcs.emplace_back(map.flat(a, b1), map.flat(a, b2));
    for (Vertex b = 0; b < h.order(); ++b)
        for (auto [a1, a2] : g.arcs())
            arcs.emplace_back(map.flat(a1, b), map.flat(a2, b));
    return {Digraph(map.order(), arcs, product_labels(g, h)), map};
}

auto digdom::direct_product(const Digraph & g, const Digraph & h) -> Product
{
    auto map = product_map_for(g, h);
    auto g_arcs = g.arcs(), h_arcs = h.arcs();
    vector<Arc> arcs;
    arcs.reserve(g_arcs.size() * h_arcs.size());
    for (auto [a1, a2] : g_arcs)
        for (auto [b1, b2] : h_arcs)
            arcs.emplace_back(map.flat(a1, b1), map.flat(a2, b2));
    return {Digraph(map.order(), arcs, product_labels(g, h)), map};
}

auto digdom::induced_subdigraph(const Digraph & d, const VertexSet & vertices) -> Digraph
{
    vector<Vertex> position(d.order(), d.order());
    vector<string> labels;
    size_t next = 0;
    for (auto v : vertices) {
        position[v] = next++;
        if (d.has_labels())
            labels.push_back(d.label(v));
    }
    vector<Arc> arcs;
    for (auto u : vertices)
        for (auto v : d.out_neighbours(u) & vertices)
            arcs.emplace_back(position[u], position[v]);
    return Digraph(next, arcs, std::move(labels));
}

auto digdom::product_set(const ProductVertexMap & map, std::span<const std::pair<Vertex, Vertex>> pairs) -> VertexSet
{
    VertexSet result(map.order());
    for (auto [g, h] : pairs) {
        if (g >= map.left_order() || h >= map.right_order())
            throw std::out_of_range("pair (" + to_string(g) + "," + to_string(h) + ") outside the product");
        result.set(map.flat(g, h));
    }
    return result;
}
