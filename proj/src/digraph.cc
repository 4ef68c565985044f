#include <digdom/digraph.hh>

#include <algorithm>
#include <deque>
#include <limits>

using namespace digdom;

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto check_order(size_t n) -> void
    {
        if (n > max_vertices)
            throw CapacityError("graph of order " + to_string(n) + " exceeds capacity " + to_string(max_vertices));
    }

    auto arc_string(Vertex u, Vertex v) -> string
    {
        return "(" + to_string(u) + "," + to_string(v) + ")";
    }
}

Digraph::Digraph(size_t n, std::span<const Arc> arcs, vector<string> labels) :
    _out(n, VertexSet(n)),
    _in(n, VertexSet(n)),
    _labels(std::move(labels))
{
    check_order(n);
    if (! _labels.empty() && _labels.size() != n)
        throw GraphError("expected " + to_string(n) + " labels, got " + to_string(_labels.size()));

    for (auto [u, v] : arcs) {
        if (u >= n || v >= n)
            throw GraphError("arc " + arc_string(u, v) + " has an endpoint outside 0.." + to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw GraphError("arc " + arc_string(u, v) + " is a self-loop");
        if (! _out[u].test(v)) {
            _out[u].set(v);
            _in[v].set(u);
            ++_arc_count;
        }
    }

    _closed_out = _out;
    _closed_in = _in;
    for (Vertex v = 0; v < n; ++v) {
        _closed_out[v].set(v);
        _closed_in[v].set(v);
    }
}

auto Digraph::arcs() const -> vector<Arc>
{
    vector<Arc> result;
    result.reserve(_arc_count);
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : _out[u])
            result.emplace_back(u, v);
    return result;
}

auto Digraph::label(Vertex v) const -> string
{
    return _labels.empty() ? to_string(v) : _labels[v];
}

auto Digraph::with_labels(vector<string> labels) const -> Digraph
{
    auto a = arcs();
    return Digraph(order(), a, std::move(labels));
}

auto Digraph::fingerprint() const -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    mix(order());
    for (auto [u, v] : arcs()) {
        mix(u);
        mix(v);
    }
    return h;
}

UndirectedGraph::UndirectedGraph(size_t n, std::span<const Edge> edges) : _adj(n, VertexSet(n))
{
    check_order(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge {" + to_string(u) + "," + to_string(v) + "} has an endpoint outside the graph");
        if (u == v)
            throw GraphError("edge {" + to_string(u) + "," + to_string(v) + "} is a loop");
        if (! _adj[u].test(v)) {
            _adj[u].set(v);
            _adj[v].set(u);
            ++_edge_count;
        }
    }
}

auto UndirectedGraph::from_rows(vector<VertexSet> rows) -> UndirectedGraph
{
    check_order(rows.size());
    UndirectedGraph result;
    size_t degree_sum = 0;
    for (Vertex v = 0; v < rows.size(); ++v) {
        if (rows[v].capacity() != rows.size())
            throw GraphError("adjacency row " + to_string(v) + " has the wrong capacity");
        if (rows[v].test(v))
            throw GraphError("adjacency row " + to_string(v) + " contains a loop");
        for (auto u : rows[v])
            if (! rows[u].test(v))
                throw GraphError("adjacency rows are not symmetric at {" + to_string(u) + "," + to_string(v) + "}");
        degree_sum += rows[v].count();
    }
    result._adj = std::move(rows);
    result._edge_count = degree_sum / 2;
    return result;
}

auto UndirectedGraph::closed_neighbours(Vertex v) const -> VertexSet
{
    auto result = _adj[v];
    result.set(v);
    return result;
}

auto UndirectedGraph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    for (Vertex u = 0; u < order(); ++u)
        for (auto v = _adj[u].next(u + 1); v < order(); v = _adj[u].next(v + 1))
            result.emplace_back(u, v);
    return result;
}

auto digdom::build_digraph(size_t n, std::span<const Arc> arcs) -> Digraph
{
    return Digraph(n, arcs);
}

auto digdom::build_digraph(size_t n, std::initializer_list<Arc> arcs) -> Digraph
{
    return Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

auto digdom::inline_instance_id(const Digraph & d) -> string
{
    static const char hex[] = "0123456789abcdef";
    auto h = d.fingerprint();
    string digits(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        digits[i] = hex[h & 0xf];
    return "digraph:n=" + to_string(d.order()) + ",h=" + digits;
}

auto digdom::underlying_graph(const Digraph & d) -> UndirectedGraph
{
    vector<VertexSet> rows;
    rows.reserve(d.order());
    for (Vertex v = 0; v < d.order(); ++v)
        rows.push_back(d.out_neighbours(v) | d.in_neighbours(v));
    return UndirectedGraph::from_rows(std::move(rows));
}

auto digdom::closed_out_neighbourhood(const Digraph & d, Vertex v) -> VertexSet
{
    return d.closed_out_neighbours(v);
}

auto digdom::open_out_neighbourhood(const Digraph & d, Vertex v) -> VertexSet
{
    return d.out_neighbours(v);
}

auto digdom::closed_in_neighbourhood(const Digraph & d, Vertex v) -> VertexSet
{
    return d.closed_in_neighbours(v);
}

auto digdom::open_in_neighbourhood(const Digraph & d, Vertex v) -> VertexSet
{
    return d.in_neighbours(v);
}

auto digdom::min_in_degree(const Digraph & d) -> size_t
{
    if (d.order() == 0)
        return 0;
    size_t result = std::numeric_limits<size_t>::max();
    for (Vertex v = 0; v < d.order(); ++v)
        result = std::min(result, d.in_degree(v));
    return result;
}

auto digdom::max_out_degree(const Digraph & d) -> size_t
{
    size_t result = 0;
    for (Vertex v = 0; v < d.order(); ++v)
        result = std::max(result, d.out_degree(v));
    return result;
}

auto digdom::girth(const UndirectedGraph & g) -> optional<size_t>
{
    const size_t n = g.order();
    constexpr size_t unseen = std::numeric_limits<size_t>::max();
    optional<size_t> best;
    vector<size_t> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        parent[root] = unseen;
        std::deque<Vertex> queue{root};
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            if (best && 2 * dist[u] + 1 >= *best)
                break;
            for (auto w : g.neighbours(u)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                else if (parent[u] != w) {
                    // non-tree edge closes a cycle of length at most this
                    size_t length = dist[u] + dist[w] + 1;
                    if (! best || length < *best)
                        best = length;
                }
            }
        }
    }
    return best;
}

auto digdom::is_connected(const UndirectedGraph & g) -> bool
{
    if (g.order() == 0)
        return true;
    VertexSet seen(g.order());
    seen.set(0);
    vector<Vertex> stack{0};
    while (! stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : g.neighbours(u))
            if (! seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
    }
    return seen.count() == g.order();
}

auto digdom::is_tree(const UndirectedGraph & g) -> bool
{
    return g.order() >= 1 && g.edge_count() + 1 == g.order() && is_connected(g);
}

auto digdom::underlying_connected(const Digraph & d) -> bool
{
    return is_connected(underlying_graph(d));
}

auto digdom::is_ditree(const Digraph & d) -> bool
{
    return is_tree(underlying_graph(d));
}

auto digdom::is_acyclic_digraph(const Digraph & d) -> bool
{
    // Kahn's algorithm: acyclic iff every vertex is eventually removed
    vector<size_t> remaining_in(d.order());
    vector<Vertex> ready;
    for (Vertex v = 0; v < d.order(); ++v) {
        remaining_in[v] = d.in_degree(v);
        if (remaining_in[v] == 0)
            ready.push_back(v);
    }
    size_t removed = 0;
    while (! ready.empty()) {
        auto u = ready.back();
        ready.pop_back();
        ++removed;
        for (auto w : d.out_neighbours(u))
            if (--remaining_in[w] == 0)
                ready.push_back(w);
    }
    return removed == d.order();
}

auto digdom::classify_leaves(const Digraph & d) -> vector<std::uint8_t>
{
    auto un = underlying_graph(d);
    vector<std::uint8_t> tags(d.order(), tag_none);
    for (Vertex v = 0; v < d.order(); ++v)
        if (un.degree(v) == 1) {
            tags[v] |= tag_leaf;
            tags[v] |= d.in_degree(v) == 0 ? tag_isolated_leaf : tag_non_isolated_leaf;
        }
    for (Vertex v = 0; v < d.order(); ++v) {
        size_t leaf_neighbours = 0;
        for (auto w : un.neighbours(v))
            if (tags[w] & tag_leaf)
                ++leaf_neighbours;
        if (leaf_neighbours >= 1)
            tags[v] |= tag_support;
        if (leaf_neighbours >= 2)
            tags[v] |= tag_strong_support;
    }
    return tags;
}

auto digdom::strong_supports_with_two_non_isolated_leaves(const Digraph & d) -> VertexSet
{
    auto un = underlying_graph(d);
    auto tags = classify_leaves(d);
    VertexSet result(d.order());
    for (Vertex v = 0; v < d.order(); ++v) {
        if (! (tags[v] & tag_strong_support))
            continue;
        size_t count = 0;
        for (auto w : un.neighbours(v))
            if (tags[w] & tag_non_isolated_leaf)
                ++count;
        if (count >= 2)
            result.set(v);
    }
    return result;
}

auto digdom::tag_names(std::uint8_t tags) -> vector<string>
{
    vector<string> result;
    if (tags & tag_isolated_leaf)
        result.emplace_back("isolated_leaf");
    if (tags & tag_non_isolated_leaf)
        result.emplace_back("non_isolated_leaf");
    if (tags & tag_support)
        result.emplace_back("support");
    if (tags & tag_strong_support)
        result.emplace_back("strong_support");
    if (result.empty())
        result.emplace_back("other");
    return result;
}
