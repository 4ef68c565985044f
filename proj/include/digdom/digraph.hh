#ifndef DIGDOM_DIGRAPH_HH
#define DIGDOM_DIGRAPH_HH

#include <digdom/vertex_set.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace digdom
{
    /// Ordered pair (tail, head), meaning an arc tail -> head.
    using Arc = std::pair<Vertex, Vertex>;
    using Edge = std::pair<Vertex, Vertex>;

    class GraphError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Raised when a construction would exceed max_vertices.
    class CapacityError : public GraphError
    {
    public:
        using GraphError::GraphError;
    };

    /**
     * A simple digraph on vertices 0..n-1 with an irreflexive arc relation.
     * Both adjacency directions are stored as bit rows. Immutable once built.
     */
    class Digraph
    {
    public:
        Digraph() = default;

        /// Throws GraphError naming the offending arc on a self-loop or an
        /// out-of-range endpoint. Duplicate arcs collapse.
        Digraph(std::size_t n, std::span<const Arc> arcs, std::vector<std::string> labels = {});

        auto order() const -> std::size_t { return _out.size(); }
        auto arc_count() const -> std::size_t { return _arc_count; }
        auto has_arc(Vertex u, Vertex v) const -> bool { return _out[u].test(v); }

        /// N+(v) and N-(v).
        auto out_neighbours(Vertex v) const -> const VertexSet & { return _out[v]; }
        auto in_neighbours(Vertex v) const -> const VertexSet & { return _in[v]; }
        /// N+[v] and N-[v].
        auto closed_out_neighbours(Vertex v) const -> const VertexSet & { return _closed_out[v]; }
        auto closed_in_neighbours(Vertex v) const -> const VertexSet & { return _closed_in[v]; }

        auto out_degree(Vertex v) const -> std::size_t { return _out[v].count(); }
        auto in_degree(Vertex v) const -> std::size_t { return _in[v].count(); }

        /// All arcs in lexicographic order.
        auto arcs() const -> std::vector<Arc>;

        auto has_labels() const -> bool { return ! _labels.empty(); }
        auto labels() const -> const std::vector<std::string> & { return _labels; }
        /// The display label, or the decimal index when unlabelled.
        auto label(Vertex v) const -> std::string;
        auto with_labels(std::vector<std::string> labels) const -> Digraph;

        /// Stable 64-bit FNV-1a hash of (n, sorted arc list).
        auto fingerprint() const -> std::uint64_t;

        auto operator==(const Digraph & other) const -> bool { return _out == other._out; }

    private:
        std::vector<VertexSet> _out, _in, _closed_out, _closed_in;
        std::vector<std::string> _labels;
        std::size_t _arc_count = 0;
    };

    /// Symmetric irreflexive graph on 0..n-1.
    class UndirectedGraph
    {
    public:
        UndirectedGraph() = default;
        UndirectedGraph(std::size_t n, std::span<const Edge> edges);

        /// Rows must be symmetric and irreflexive; throws GraphError otherwise.
        static auto from_rows(std::vector<VertexSet> rows) -> UndirectedGraph;

        auto order() const -> std::size_t { return _adj.size(); }
        auto edge_count() const -> std::size_t { return _edge_count; }
        auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].test(v); }
        auto neighbours(Vertex v) const -> const VertexSet & { return _adj[v]; }
        auto closed_neighbours(Vertex v) const -> VertexSet;
        auto degree(Vertex v) const -> std::size_t { return _adj[v].count(); }

        /// Edges {u,v} with u < v in lexicographic order.
        auto edges() const -> std::vector<Edge>;

        auto operator==(const UndirectedGraph & other) const -> bool = default;

    private:
        std::vector<VertexSet> _adj;
        std::size_t _edge_count = 0;
    };

    auto build_digraph(std::size_t n, std::span<const Arc> arcs) -> Digraph;

    auto build_digraph(std::size_t n, std::initializer_list<Arc> arcs) -> Digraph;

    /// Descriptor for an anonymous digraph, e.g. "digraph:n=5,h=89ab01cd23ef4567".
    auto inline_instance_id(const Digraph & d) -> std::string;

    auto underlying_graph(const Digraph & d) -> UndirectedGraph;

    auto closed_out_neighbourhood(const Digraph & d, Vertex v) -> VertexSet;
    auto open_out_neighbourhood(const Digraph & d, Vertex v) -> VertexSet;
    auto closed_in_neighbourhood(const Digraph & d, Vertex v) -> VertexSet;
    auto open_in_neighbourhood(const Digraph & d, Vertex v) -> VertexSet;

    /// δ⁻(D); zero for the empty digraph.
    auto min_in_degree(const Digraph & d) -> std::size_t;
    /// Δ⁺(D).
    auto max_out_degree(const Digraph & d) -> std::size_t;

    /// Length of a shortest cycle, or nullopt for a forest. BFS from every vertex.
    auto girth(const UndirectedGraph & g) -> std::optional<std::size_t>;

    auto is_connected(const UndirectedGraph & g) -> bool;
    auto is_tree(const UndirectedGraph & g) -> bool;
    auto underlying_connected(const Digraph & d) -> bool;
    auto is_ditree(const Digraph & d) -> bool;
    /// True when there is no directed cycle.
    auto is_acyclic_digraph(const Digraph & d) -> bool;

    enum LeafTag : std::uint8_t
    {
        tag_none = 0,
        tag_leaf = 1,
        tag_isolated_leaf = 2,
        tag_non_isolated_leaf = 4,
        tag_support = 8,
        tag_strong_support = 16
    };

    /// Per-vertex bitmask of LeafTag values, read off the underlying graph.
    /// A vertex with no tag is "other".
    auto classify_leaves(const Digraph & d) -> std::vector<std::uint8_t>;

    /// Vertices with at least two non-isolated leaf neighbours.
    auto strong_supports_with_two_non_isolated_leaves(const Digraph & d) -> VertexSet;

    auto tag_names(std::uint8_t tags) -> std::vector<std::string>;
}

#endif
