#ifndef DIGDOM_VALIDATE_HH
#define DIGDOM_VALIDATE_HH

#include <digdom/digraph.hh>

namespace digdom
{
    // Definition-level predicates, written directly against the arc relation.
    // They read the arc relation, not the neighbourhood rows the solvers use.

    /// Every x outside S has an in-neighbour in S.
    auto is_dominating_set(const Digraph & d, const VertexSet & s) -> bool;

    /// Every x has an in-neighbour in S.
    auto is_total_dominating_set(const Digraph & d, const VertexSet & s) -> bool;

    /// No arc joins two members, and no vertex has arcs to two members.
    auto is_packing(const Digraph & d, const VertexSet & p) -> bool;

    /// Closed in-neighbourhoods of members are pairwise disjoint.
    auto is_packing_by_in_neighbourhoods(const Digraph & d, const VertexSet & p) -> bool;

    /// No vertex has arcs to two distinct members.
    auto is_open_packing(const Digraph & d, const VertexSet & p) -> bool;

    auto is_undirected_dominating_set(const UndirectedGraph & g, const VertexSet & s) -> bool;
    /// Closed neighbourhoods of members are pairwise disjoint.
    auto is_two_packing(const UndirectedGraph & g, const VertexSet & p) -> bool;
    auto is_independent_set(const UndirectedGraph & g, const VertexSet & s) -> bool;
    auto is_clique(const UndirectedGraph & g, const VertexSet & s) -> bool;
}

#endif
