#include <digdom/auxgraph.hh>
#include <digdom/deadline.hh>

#include <algorithm>
#include <deque>
#include <limits>

using namespace digdom;

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    template <typename NeighbourhoodOf_>
    auto intersection_graph(size_t n, const NeighbourhoodOf_ & neighbourhood_of) -> UndirectedGraph
    {
        vector<VertexSet> rows(n, VertexSet(n));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (neighbourhood_of(u).intersects(neighbourhood_of(v))) {
                    rows[u].set(v);
                    rows[v].set(u);
                }
        return UndirectedGraph::from_rows(std::move(rows));
    }

    auto lex_bfs(const UndirectedGraph & g) -> vector<Vertex>
    {
        const size_t n = g.order();
        vector<vector<size_t>> labels(n);
        VertexSet numbered(n);
        vector<Vertex> visit;
        visit.reserve(n);
        for (size_t step = 0; step < n; ++step) {
            optional<Vertex> best;
            for (Vertex v = 0; v < n; ++v)
                if (! numbered.test(v) && (! best || labels[*best] < labels[v]))
                    best = v;
            numbered.set(*best);
            visit.push_back(*best);
            for (auto w : g.neighbours(*best))
                if (! numbered.test(w))
                    labels[w].push_back(n - step);
        }
        return visit;
    }

    /// Shortest u-w path avoiding the blocked vertices, as a vertex list from u to w.
    auto shortest_path(const UndirectedGraph & g, Vertex u, Vertex w, const VertexSet & blocked) -> vector<Vertex>
    {
        constexpr size_t none = std::numeric_limits<size_t>::max();
        vector<size_t> parent(g.order(), none);
        parent[u] = u;
        std::deque<Vertex> queue{u};
        while (! queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            if (x == w)
                break;
            for (auto y : g.neighbours(x))
                if (parent[y] == none && ! blocked.test(y)) {
                    parent[y] = x;
                    queue.push_back(y);
                }
        }
        if (parent[w] == none)
            return {};
        vector<Vertex> path{w};
        while (path.back() != u)
            path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    /// A chordless cycle through some vertex v exists iff two non-adjacent
    /// neighbours of v are joined by a path avoiding the rest of N[v].
    auto find_chordless_cycle(const UndirectedGraph & g) -> vector<Vertex>
    {
        for (Vertex v = 0; v < g.order(); ++v)
            for (auto u : g.neighbours(v))
                for (auto w = g.neighbours(v).next(u + 1); w < g.order(); w = g.neighbours(v).next(w + 1)) {
                    if (g.adjacent(u, w))
                        continue;
                    auto blocked = g.closed_neighbours(v);
                    blocked.reset(u);
                    blocked.reset(w);
                    auto path = shortest_path(g, u, w, blocked);
                    if (! path.empty()) {
                        vector<Vertex> cycle{v};
                        cycle.insert(cycle.end(), path.begin(), path.end());
                        return cycle;
                    }
                }
        return {};
    }

    struct CliqueEnumeration
    {
        const UndirectedGraph & graph;
        size_t limit;
        vector<VertexSet> cliques;

        auto expand(VertexSet & r, VertexSet p, VertexSet x) -> void
        {
            if (p.empty()) {
                if (x.empty()) {
                    if (cliques.size() == limit)
                        throw CliqueLimitExceeded("more than " + std::to_string(limit) + " maximal cliques");
                    cliques.push_back(r);
                }
                return;
            }

            Vertex pivot = 0;
            size_t pivot_score = 0;
            bool have_pivot = false;
            for (auto & candidates : {p, x})
                for (auto u : candidates) {
                    auto score = p.intersection_count(graph.neighbours(u));
                    if (! have_pivot || score > pivot_score) {
                        pivot = u;
                        pivot_score = score;
                        have_pivot = true;
                    }
                }

            for (auto v : p - graph.neighbours(pivot)) {
                r.set(v);
                expand(r, p & graph.neighbours(v), x & graph.neighbours(v));
                r.reset(v);
                p.reset(v);
                x.set(v);
            }
        }
    };

    auto girth_at_least_seven(const Digraph & d, VerificationRecord & record) -> bool
    {
        auto g = girth(underlying_graph(d));
        record.values["girth"] = g ? static_cast<long long>(*g) : -1;
        return ! g || *g >= 7;
    }

    template <typename ContainerOf_>
    auto check_helly(const Digraph & d, const UndirectedGraph & aux, const ContainerOf_ & container_of, size_t limit,
        VerificationRecord & record) -> void
    {
        auto cliques = maximal_cliques(aux, limit);
        record.values["maximal_cliques"] = static_cast<long long>(cliques.size());
        size_t contained = 0;
        for (auto & clique : cliques) {
            optional<Vertex> centre;
            for (Vertex w = 0; w < d.order() && ! centre; ++w)
                if (clique.is_subset_of(container_of(w)))
                    centre = w;
            if (centre)
                ++contained;
            else if (! record.witnesses.contains("failing_clique"))
                record.add_witness("failing_clique", clique);
        }
        record.lhs = static_cast<long long>(contained);
        record.rhs = static_cast<long long>(cliques.size());
        bool all_contained = contained == cliques.size();
        if (record.hypotheses_met)
            record.verdict = all_contained ? Verdict::holds : Verdict::fails;
        else
            record.verdict = Verdict::hypothesis_not_met;
        record.note = all_contained ? "every maximal clique lies in one neighbourhood" : "some maximal clique lies in no neighbourhood";
    }
}

auto digdom::closed_in_neighbourhood_graph(const Digraph & d) -> UndirectedGraph
{
    return intersection_graph(d.order(), [&](Vertex v) -> const VertexSet & { return d.closed_in_neighbours(v); });
}

auto digdom::open_in_neighbourhood_graph(const Digraph & d) -> UndirectedGraph
{
    return intersection_graph(d.order(), [&](Vertex v) -> const VertexSet & { return d.in_neighbours(v); });
}

auto digdom::closed_neighbourhood_graph(const UndirectedGraph & g) -> UndirectedGraph
{
    vector<VertexSet> closed;
    closed.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        closed.push_back(g.closed_neighbours(v));
    return intersection_graph(g.order(), [&](Vertex v) -> const VertexSet & { return closed[v]; });
}

auto digdom::complement(const UndirectedGraph & g) -> UndirectedGraph
{
    vector<VertexSet> rows;
    rows.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto row = VertexSet::full(g.order()) - g.neighbours(v);
        row.reset(v);
        rows.push_back(std::move(row));
    }
    return UndirectedGraph::from_rows(std::move(rows));
}

auto digdom::is_chordal(const UndirectedGraph & g) -> ChordalityResult
{
    auto visit = lex_bfs(g);
    vector<Vertex> order(visit.rbegin(), visit.rend());

    vector<size_t> position(g.order());
    for (size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;

    // For each v, its earliest later neighbour must be adjacent to all its other later neighbours.
    bool ok = true;
    for (size_t i = 0; i < order.size() && ok; ++i) {
        auto v = order[i];
        optional<Vertex> parent;
        for (auto w : g.neighbours(v))
            if (position[w] > i && (! parent || position[w] < position[*parent]))
                parent = w;
        if (! parent)
            continue;
        for (auto w : g.neighbours(v))
            if (position[w] > i && w != *parent && ! g.adjacent(*parent, w)) {
                ok = false;
                break;
            }
    }

    ChordalityResult result;
    if (ok) {
        result.chordal = true;
        result.elimination_order = std::move(order);
    }
    else
        result.chordless_cycle = find_chordless_cycle(g);
    return result;
}

auto digdom::is_perfect_elimination_order(const UndirectedGraph & g, const vector<Vertex> & order) -> bool
{
    if (order.size() != g.order())
        return false;
    vector<size_t> position(g.order(), g.order());
    for (size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= g.order() || position[order[i]] != g.order())
            return false;
        position[order[i]] = i;
    }
    for (size_t i = 0; i < order.size(); ++i) {
        vector<Vertex> later;
        for (auto w : g.neighbours(order[i]))
            if (position[w] > i)
                later.push_back(w);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (! g.adjacent(later[a], later[b]))
                    return false;
    }
    return true;
}

auto digdom::is_chordless_cycle(const UndirectedGraph & g, const vector<Vertex> & cycle) -> bool
{
    const size_t k = cycle.size();
    if (k < 4)
        return false;
    VertexSet members(g.order());
    for (auto v : cycle) {
        if (v >= g.order() || members.test(v))
            return false;
        members.set(v);
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive)
                return false;
        }
    return true;
}

auto digdom::maximal_cliques(const UndirectedGraph & g, size_t limit) -> vector<VertexSet>
{
    CliqueEnumeration enumeration{g, limit, {}};
    VertexSet r(g.order());
    enumeration.expand(r, VertexSet::full(g.order()), VertexSet(g.order()));
    std::sort(enumeration.cliques.begin(), enumeration.cliques.end(),
        [](const VertexSet & a, const VertexSet & b) { return a.lexicographic_less(b); });
    return std::move(enumeration.cliques);
}

auto digdom::check_closed_helly_lemma(const Digraph & d, size_t limit) -> VerificationRecord
{
    auto start = Clock::now();
    VerificationRecord record;
    record.claim = Claim::closed_helly;
    record.instance = inline_instance_id(d);
    record.hypotheses_met = girth_at_least_seven(d, record);
    check_helly(d, closed_in_neighbourhood_graph(d), [&](Vertex w) -> const VertexSet & { return d.closed_out_neighbours(w); },
        limit, record);
    record.elapsed = Clock::now() - start;
    return record;
}

auto digdom::check_open_helly_lemma(const Digraph & d, size_t limit) -> VerificationRecord
{
    auto start = Clock::now();
    VerificationRecord record;
    record.claim = Claim::open_helly;
    record.instance = inline_instance_id(d);
    bool girth_ok = girth_at_least_seven(d, record);
    record.values["min_in_degree"] = static_cast<long long>(min_in_degree(d));
    record.hypotheses_met = girth_ok && min_in_degree(d) >= 1;
    check_helly(d, open_in_neighbourhood_graph(d), [&](Vertex w) -> const VertexSet & { return d.out_neighbours(w); }, limit,
        record);
    record.elapsed = Clock::now() - start;
    return record;
}
