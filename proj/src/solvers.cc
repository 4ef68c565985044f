#include <digdom/auxgraph.hh>
#include <digdom/solvers.hh>
#include <digdom/validate.hh>

#include <algorithm>
#include <numeric>

using namespace digdom;

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    class CoverSearch
    {
    public:
        CoverSearch(size_t universe_size, std::span<const VertexSet> sets, Deadline & deadline) :
            _universe(universe_size),
            _sets(sets),
            _covering(universe_size, VertexSet(sets.size())),
            _deadline(deadline)
        {
            for (size_t s = 0; s < sets.size(); ++s)
                for (auto e : sets[s])
                    _covering[e].set(s);
        }

        auto feasible() const -> bool
        {
            return std::all_of(_covering.begin(), _covering.end(), [](const VertexSet & c) { return c.any(); });
        }

        auto greedy() const -> vector<size_t>
        {
            vector<size_t> chosen;
            auto uncovered = VertexSet::full(_universe);
            while (uncovered.any()) {
                size_t best = 0, best_gain = 0;
                for (size_t s = 0; s < _sets.size(); ++s) {
                    auto gain = _sets[s].intersection_count(uncovered);
                    if (gain > best_gain) {
                        best = s;
                        best_gain = gain;
                    }
                }
                chosen.push_back(best);
                uncovered -= _sets[best];
            }
            return chosen;
        }

        auto run() -> vector<size_t>
        {
            _best = greedy();
            vector<size_t> chosen;
            search(VertexSet::full(_universe), VertexSet::full(_sets.size()), chosen);
            std::sort(_best.begin(), _best.end());
            return _best;
        }

    private:
        size_t _universe;
        std::span<const VertexSet> _sets;
        vector<VertexSet> _covering;
        Deadline & _deadline;
        vector<size_t> _best;

        auto lower_bound(const VertexSet & uncovered, const VertexSet & available,
            const vector<std::pair<size_t, Vertex>> & by_choice) const -> size_t
        {
            // elements whose available sets are pairwise disjoint each need their own set
            VertexSet used(_sets.size());
            size_t disjoint = 0;
            for (auto [_, e] : by_choice) {
                auto options = _covering[e] & available;
                if (! options.intersects(used)) {
                    ++disjoint;
                    used |= options;
                }
            }

            size_t max_gain = 0;
            for (auto s : available)
                max_gain = std::max(max_gain, _sets[s].intersection_count(uncovered));
            size_t remaining = uncovered.count();
            size_t ratio = max_gain == 0 ? remaining : (remaining + max_gain - 1) / max_gain;
            return std::max(disjoint, ratio);
        }

        auto search(const VertexSet & uncovered, VertexSet available, vector<size_t> & chosen) -> void
        {
            if (_deadline.expired())
                return;
            if (uncovered.empty()) {
                if (chosen.size() < _best.size())
                    _best = chosen;
                return;
            }
            if (chosen.size() + 1 >= _best.size())
                return;

            vector<std::pair<size_t, Vertex>> by_choice;
            for (auto e : uncovered) {
                auto options = _covering[e].intersection_count(available);
                if (options == 0)
                    return;
                by_choice.emplace_back(options, e);
            }
            std::sort(by_choice.begin(), by_choice.end());

            if (chosen.size() + lower_bound(uncovered, available, by_choice) >= _best.size())
                return;

            auto branch_element = by_choice.front().second;
            vector<std::pair<size_t, size_t>> candidates;
            for (auto s : _covering[branch_element] & available)
                candidates.emplace_back(_sets[s].intersection_count(uncovered), s);
            std::sort(candidates.begin(), candidates.end(), [](auto & a, auto & b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
            });

            for (auto [_, s] : candidates) {
                available.reset(s);
                chosen.push_back(s);
                search(uncovered - _sets[s], available, chosen);
                chosen.pop_back();
                if (_deadline.has_expired())
                    return;
            }
        }
    };

    class IndependentSetSearch
    {
    public:
        IndependentSetSearch(const UndirectedGraph & g, Deadline & deadline) : _g(g), _deadline(deadline), _best(g.order()) {}

        auto greedy() const -> VertexSet
        {
            VertexSet result(_g.order());
            auto remaining = VertexSet::full(_g.order());
            while (remaining.any()) {
                Vertex pick = remaining.first();
                size_t pick_degree = remaining.intersection_count(_g.neighbours(pick));
                for (auto v : remaining) {
                    auto degree = remaining.intersection_count(_g.neighbours(v));
                    if (degree < pick_degree) {
                        pick = v;
                        pick_degree = degree;
                    }
                }
                result.set(pick);
                remaining -= _g.closed_neighbours(pick);
            }
            return result;
        }

        auto maximum() -> VertexSet
        {
            _best = greedy();
            VertexSet current(_g.order());
            search(VertexSet::full(_g.order()), current);
            return _best;
        }

        auto enumerate(size_t alpha, size_t limit) -> std::pair<vector<VertexSet>, bool>
        {
            _alpha = alpha;
            _limit = limit;
            VertexSet current(_g.order());
            collect(VertexSet::full(_g.order()), current);
            std::sort(_found.begin(), _found.end(), [](auto & a, auto & b) { return a.lexicographic_less(b); });
            return {std::move(_found), _truncated};
        }

    private:
        const UndirectedGraph & _g;
        Deadline & _deadline;
        VertexSet _best;
        size_t _alpha = 0, _limit = 0;
        vector<VertexSet> _found;
        bool _truncated = false;

        /// Greedy partition of the candidates into cliques; an upper bound on α(G[P]).
        auto clique_cover(VertexSet remaining) const -> size_t
        {
            size_t cliques = 0;
            while (remaining.any()) {
                auto v = remaining.first();
                auto clique = VertexSet(_g.order());
                clique.set(v);
                auto extend = remaining & _g.neighbours(v);
                while (extend.any()) {
                    auto u = extend.first();
                    clique.set(u);
                    extend &= _g.neighbours(u);
                }
                remaining -= clique;
                ++cliques;
            }
            return cliques;
        }

        auto search(VertexSet candidates, VertexSet & current) -> void
        {
            if (_deadline.expired())
                return;

            // vertices of degree at most one in G[P] belong to some maximum independent set
            VertexSet forced(_g.order());
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto v : candidates)
                    if (candidates.intersection_count(_g.neighbours(v)) <= 1) {
                        forced.set(v);
                        candidates -= _g.closed_neighbours(v);
                        changed = true;
                        break;
                    }
            }
            current |= forced;

            if (candidates.empty()) {
                if (current.count() > _best.count())
                    _best = current;
            }
            else if (current.count() + clique_cover(candidates) > _best.count()) {
                Vertex pivot = candidates.first();
                size_t pivot_degree = 0;
                for (auto v : candidates) {
                    auto degree = candidates.intersection_count(_g.neighbours(v));
                    if (degree > pivot_degree) {
                        pivot = v;
                        pivot_degree = degree;
                    }
                }

                current.set(pivot);
                search(candidates - _g.closed_neighbours(pivot), current);
                current.reset(pivot);

                candidates.reset(pivot);
                search(candidates, current);
            }

            current -= forced;
        }

        auto collect(VertexSet candidates, VertexSet & current) -> void
        {
            if (_truncated || _deadline.expired())
                return;
            if (candidates.empty()) {
                if (current.count() == _alpha) {
                    if (_found.size() == _limit) {
                        _truncated = true;
                        return;
                    }
                    _found.push_back(current);
                }
                return;
            }
            if (current.count() + clique_cover(candidates) < _alpha)
                return;

            auto v = candidates.first();
            current.set(v);
            collect(candidates - _g.closed_neighbours(v), current);
            current.reset(v);
            candidates.reset(v);
            collect(candidates, current);
        }
    };

    auto cover_solution(size_t n, std::span<const VertexSet> sets, const SolveOptions & options) -> Solution
    {
        auto result = min_set_cover(n, sets, options);
        Solution solution;
        solution.status = result.status;
        solution.witness = VertexSet(n);
        for (auto s : result.chosen)
            solution.witness.set(s);
        solution.elapsed = result.elapsed;
        return solution;
    }

    auto independent_set_solution(const UndirectedGraph & g, const SolveOptions & options) -> Solution
    {
        return max_independent_set(g, options);
    }
}

auto digdom::to_string(SolveStatus s) -> string
{
    switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::timeout: return "timeout";
    }
    return "unknown";
}

auto digdom::min_set_cover(size_t universe_size, std::span<const VertexSet> sets, const SolveOptions & options) -> CoverResult
{
    Deadline deadline{options.timeout};
    for (auto & s : sets)
        if (s.capacity() != universe_size)
            throw std::invalid_argument("cover set capacity differs from the universe size");

    CoverResult result;
    CoverSearch search(universe_size, sets, deadline);
    if (! search.feasible()) {
        result.status = SolveStatus::infeasible;
    }
    else {
        result.chosen = search.run();
        result.status = deadline.has_expired() ? SolveStatus::timeout : SolveStatus::optimal;
    }
    result.elapsed = deadline.elapsed();
    return result;
}

auto digdom::max_independent_set(const UndirectedGraph & g, const SolveOptions & options) -> Solution
{
    Deadline deadline{options.timeout};
    IndependentSetSearch search(g, deadline);
    Solution solution;
    solution.witness = search.maximum();
    solution.status = deadline.has_expired() ? SolveStatus::timeout : SolveStatus::optimal;
    solution.elapsed = deadline.elapsed();
    return solution;
}

auto digdom::all_maximum_independent_sets(const UndirectedGraph & g, size_t limit, const SolveOptions & options)
    -> IndependentSetEnumeration
{
    IndependentSetEnumeration result;
    auto alpha = max_independent_set(g, options);
    if (! alpha.solved())
        return result;
    result.alpha = alpha.value();

    Deadline deadline{options.timeout};
    IndependentSetSearch search(g, deadline);
    auto [sets, truncated] = search.enumerate(result.alpha, limit);
    result.sets = std::move(sets);
    result.truncated = truncated;
    result.status = deadline.has_expired() ? SolveStatus::timeout : SolveStatus::optimal;
    return result;
}

auto digdom::domination_number(const Digraph & d, const SolveOptions & options) -> Solution
{
    vector<VertexSet> sets;
    sets.reserve(d.order());
    for (Vertex v = 0; v < d.order(); ++v)
        sets.push_back(d.closed_out_neighbours(v));
    auto solution = cover_solution(d.order(), sets, options);
    if (! is_dominating_set(d, solution.witness))
        throw std::logic_error("domination solver produced a non-dominating witness");
    return solution;
}

auto digdom::total_domination_number(const Digraph & d, const SolveOptions & options) -> optional<Solution>
{
    if (d.order() == 0 || min_in_degree(d) == 0)
        return std::nullopt;
    vector<VertexSet> sets;
    sets.reserve(d.order());
    for (Vertex v = 0; v < d.order(); ++v)
        sets.push_back(d.out_neighbours(v));
    auto solution = cover_solution(d.order(), sets, options);
    if (! is_total_dominating_set(d, solution.witness))
        throw std::logic_error("total domination solver produced a non-total-dominating witness");
    return solution;
}

auto digdom::packing_number(const Digraph & d, const SolveOptions & options) -> Solution
{
    auto solution = independent_set_solution(closed_in_neighbourhood_graph(d), options);
    bool by_arcs = is_packing(d, solution.witness);
    bool by_neighbourhoods = is_packing_by_in_neighbourhoods(d, solution.witness);
    if (by_arcs != by_neighbourhoods)
        throw std::logic_error("the two packing definitions disagree on " + solution.witness.to_string());
    if (! by_arcs)
        throw std::logic_error("packing solver produced a non-packing witness");
    return solution;
}

auto digdom::open_packing_number(const Digraph & d, const SolveOptions & options) -> Solution
{
    auto solution = independent_set_solution(open_in_neighbourhood_graph(d), options);
    if (! is_open_packing(d, solution.witness))
        throw std::logic_error("open packing solver produced a non-open-packing witness");
    return solution;
}

auto digdom::undirected_domination_number(const UndirectedGraph & g, const SolveOptions & options) -> Solution
{
    vector<VertexSet> sets;
    sets.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        sets.push_back(g.closed_neighbours(v));
    auto solution = cover_solution(g.order(), sets, options);
    if (! is_undirected_dominating_set(g, solution.witness))
        throw std::logic_error("undirected domination solver produced a non-dominating witness");
    return solution;
}

auto digdom::two_packing_number(const UndirectedGraph & g, const SolveOptions & options) -> Solution
{
    auto solution = independent_set_solution(closed_neighbourhood_graph(g), options);
    if (! is_two_packing(g, solution.witness))
        throw std::logic_error("2-packing solver produced an invalid witness");
    return solution;
}

auto digdom::all_maximum_packings(const Digraph & d, size_t limit, const SolveOptions & options) -> IndependentSetEnumeration
{
    return all_maximum_independent_sets(closed_in_neighbourhood_graph(d), limit, options);
}

auto digdom::greedy_dominating_set(const Digraph & d) -> VertexSet
{
    VertexSet result(d.order());
    auto undominated = VertexSet::full(d.order());
    while (undominated.any()) {
        Vertex best = 0;
        size_t best_gain = 0;
        for (Vertex v = 0; v < d.order(); ++v) {
            auto gain = d.closed_out_neighbours(v).intersection_count(undominated);
            if (gain > best_gain) {
                best = v;
                best_gain = gain;
            }
        }
        result.set(best);
        undominated -= d.closed_out_neighbours(best);
    }
    return result;
}

namespace
{
    class PartitionSearch
    {
    public:
        PartitionSearch(const Digraph & d, optional<size_t> side_size, Deadline & deadline) :
            _d(d),
            _side_size(side_size),
            _deadline(deadline),
            _first(d.order()),
            _second(d.order()),
            _completed_at(d.order())
        {
            // a vertex's requirement can be judged once its largest in-neighbour is placed
            for (Vertex x = 0; x < d.order(); ++x) {
                Vertex last = x;
                for (auto u : d.in_neighbours(x))
                    last = std::max(last, u);
                _completed_at[last].push_back(x);
            }
        }

        auto run() -> bool { return place(0); }

        auto first() const -> const VertexSet & { return _first; }
        auto second() const -> const VertexSet & { return _second; }

    private:
        const Digraph & _d;
        optional<size_t> _side_size;
        Deadline & _deadline;
        VertexSet _first, _second;
        vector<vector<Vertex>> _completed_at;

        auto consistent(Vertex placed) const -> bool
        {
            for (auto x : _completed_at[placed]) {
                auto & closed_in = _d.closed_in_neighbours(x);
                if (! closed_in.intersects(_first) || ! closed_in.intersects(_second))
                    return false;
            }
            return true;
        }

        auto place(Vertex v) -> bool
        {
            if (_deadline.expired())
                return false;
            if (v == _d.order())
                return true;
            for (int side = 0; side < (v == 0 ? 1 : 2); ++side) {
                auto & target = side == 0 ? _first : _second;
                if (_side_size && target.count() == *_side_size)
                    continue;
                target.set(v);
                if (consistent(v) && place(v + 1))
                    return true;
                target.reset(v);
                if (_deadline.has_expired())
                    return false;
            }
            return false;
        }
    };
}

auto digdom::partition_two_dominating_sets(const Digraph & d, bool require_minimum, const SolveOptions & options)
    -> DominatingPartition
{
    DominatingPartition result;
    result.first = VertexSet(d.order());
    result.second = VertexSet(d.order());
    if (d.order() == 0 || min_in_degree(d) == 0) {
        result.status = SolveStatus::infeasible;
        return result;
    }

    Deadline deadline{options.timeout};
    optional<size_t> side_size;
    if (require_minimum) {
        auto gamma = domination_number(d, options);
        if (! gamma.solved())
            return result;
        if (2 * gamma.value() != d.order()) {
            result.status = SolveStatus::infeasible;
            return result;
        }
        side_size = gamma.value();
    }

    PartitionSearch search(d, side_size, deadline);
    if (search.run()) {
        result.status = SolveStatus::optimal;
        result.first = search.first();
        result.second = search.second();
        if (! is_dominating_set(d, result.first) || ! is_dominating_set(d, result.second))
            throw std::logic_error("partition search produced a non-dominating side");
    }
    else
        result.status = deadline.has_expired() ? SolveStatus::timeout : SolveStatus::infeasible;
    return result;
}

auto digdom::compute_invariants(const Digraph & d, const string & id, const SolveOptions & options) -> InvariantReport
{
    InvariantReport report;
    report.id = id;
    report.order = d.order();
    report.arcs = d.arc_count();
    report.gamma = domination_number(d, options);
    report.gamma_t = total_domination_number(d, options);
    report.rho = packing_number(d, options);
    report.rho_open = open_packing_number(d, options);
    return report;
}

auto digdom::to_json(const InvariantReport & report, const Digraph & d, bool include_timing) -> nlohmann::json
{
    auto entry = [&](const Solution & s) {
        nlohmann::json j;
        j["value"] = s.value();
        j["status"] = to_string(s.status);
        j["witness"] = s.witness.to_vector();
        if (d.has_labels()) {
            vector<string> labels;
            for (auto v : s.witness)
                labels.push_back(d.label(v));
            j["witness_labels"] = labels;
        }
        j["elapsed_ms"] = include_timing ? std::chrono::duration<double, std::milli>(s.elapsed).count() : 0.0;
        return j;
    };
    nlohmann::json j;
    j["id"] = report.id;
    j["order"] = report.order;
    j["arcs"] = report.arcs;
    j["gamma"] = entry(report.gamma);
    j["gamma_t"] = report.gamma_t ? entry(*report.gamma_t) : nlohmann::json(nullptr);
    j["rho"] = entry(report.rho);
    j["rho_open"] = entry(report.rho_open);
    return j;
}
