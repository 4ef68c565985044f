#ifndef DIGDOM_AUXGRAPH_HH
#define DIGDOM_AUXGRAPH_HH

#include <digdom/digraph.hh>
#include <digdom/record.hh>

#include <stdexcept>
#include <vector>

namespace digdom
{
    /// N⁻c(D): u ~ v iff u != v and N⁻[u] ∩ N⁻[v] is nonempty.
    auto closed_in_neighbourhood_graph(const Digraph & d) -> UndirectedGraph;

    /// N⁻o(D): u ~ v iff u != v and N⁻(u) ∩ N⁻(v) is nonempty.
    auto open_in_neighbourhood_graph(const Digraph & d) -> UndirectedGraph;

    /// N_c(G), which is the square of G.
    auto closed_neighbourhood_graph(const UndirectedGraph & g) -> UndirectedGraph;

    /// The complement graph. Only used by oracles and tests.
    auto complement(const UndirectedGraph & g) -> UndirectedGraph;

    struct ChordalityResult
    {
        bool chordal = false;
        /// Perfect elimination order when chordal: each vertex's neighbours
        /// later in the order form a clique.
        std::vector<Vertex> elimination_order;
        /// Otherwise an induced chordless cycle of length >= 4, in cyclic order.
        std::vector<Vertex> chordless_cycle;
    };

    /// Lexicographic BFS recognition, certified in both directions.
    auto is_chordal(const UndirectedGraph & g) -> ChordalityResult;

    /// Checks that every vertex's later neighbours in the order form a clique.
    auto is_perfect_elimination_order(const UndirectedGraph & g, const std::vector<Vertex> & order) -> bool;

    /// Checks the vertices form a cycle in the given order with no chords.
    auto is_chordless_cycle(const UndirectedGraph & g, const std::vector<Vertex> & cycle) -> bool;

    class CliqueLimitExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline constexpr std::size_t default_clique_limit = 1'000'000;

    /// All maximal cliques, sorted by member lists. Bron–Kerbosch with pivoting.
    auto maximal_cliques(const UndirectedGraph & g, std::size_t limit = default_clique_limit) -> std::vector<VertexSet>;

    /// For each maximal clique K of N⁻c(D), looks for w with K ⊆ N⁺[w]. The
    /// girth >= 7 hypothesis is recorded, never enforced.
    auto check_closed_helly_lemma(const Digraph & d, std::size_t limit = default_clique_limit) -> VerificationRecord;

    /// As above with cliques of N⁻o(D) and open out-neighbourhoods N⁺(w).
    /// Hypotheses recorded: girth >= 7 and minimum in-degree >= 1.
    auto check_open_helly_lemma(const Digraph & d, std::size_t limit = default_clique_limit) -> VerificationRecord;
}

#endif
