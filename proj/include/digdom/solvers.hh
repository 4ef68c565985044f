#ifndef DIGDOM_SOLVERS_HH
#define DIGDOM_SOLVERS_HH

#include <digdom/deadline.hh>
#include <digdom/digraph.hh>

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace digdom
{
    enum class SolveStatus
    {
        optimal,
        infeasible,
        timeout
    };

    auto to_string(SolveStatus s) -> std::string;

    struct SolveOptions
    {
        std::chrono::milliseconds timeout{60'000};
    };

    /// An exact optimum and its witness. On timeout the witness is the best
    /// found so far, which is feasible but not known to be optimal.
    struct Solution
    {
        SolveStatus status = SolveStatus::timeout;
        VertexSet witness;
        std::chrono::nanoseconds elapsed{0};

        auto solved() const -> bool { return status == SolveStatus::optimal; }
        auto value() const -> std::size_t { return witness.count(); }
    };

    struct CoverResult
    {
        SolveStatus status = SolveStatus::timeout;
        /// Indices into the input set list, increasing.
        std::vector<std::size_t> chosen;
        std::chrono::nanoseconds elapsed{0};

        auto solved() const -> bool { return status == SolveStatus::optimal; }
        auto size() const -> std::size_t { return chosen.size(); }
    };

    /**
     * Exact minimum set cover by branch and bound. Branches on an uncovered
     * element with the fewest available sets, tries its sets by decreasing
     * fresh coverage (lowest index first on ties), and bounds with the larger
     * of a greedy disjoint-element packing and a max-coverage ratio. Status is
     * infeasible when some element lies in no set.
     */
    auto min_set_cover(std::size_t universe_size, std::span<const VertexSet> sets, const SolveOptions & options = {})
        -> CoverResult;

    /// Exact α(G) by branch and bound on a maximum-degree vertex with a greedy clique-cover bound.
    auto max_independent_set(const UndirectedGraph & g, const SolveOptions & options = {}) -> Solution;

    /// Every maximum independent set, sorted; at most `limit` of them.
    struct IndependentSetEnumeration
    {
        SolveStatus status = SolveStatus::timeout;
        std::size_t alpha = 0;
        std::vector<VertexSet> sets;
        bool truncated = false;
    };

    auto all_maximum_independent_sets(const UndirectedGraph & g, std::size_t limit = 100'000,
        const SolveOptions & options = {}) -> IndependentSetEnumeration;

    /// γ(D) via a cover of V by closed out-neighbourhoods.
    auto domination_number(const Digraph & d, const SolveOptions & options = {}) -> Solution;

    /// γ_t(D) via a cover by open out-neighbourhoods; nullopt iff δ⁻(D) = 0.
    auto total_domination_number(const Digraph & d, const SolveOptions & options = {}) -> std::optional<Solution>;

    /// ρ(D) = α(N⁻c(D)). The witness is re-checked through both packing definitions.
    auto packing_number(const Digraph & d, const SolveOptions & options = {}) -> Solution;

    /// ρ°(D) = α(N⁻o(D)).
    auto open_packing_number(const Digraph & d, const SolveOptions & options = {}) -> Solution;

    auto undirected_domination_number(const UndirectedGraph & g, const SolveOptions & options = {}) -> Solution;

    /// ρ₂(G) = α(N_c(G)).
    auto two_packing_number(const UndirectedGraph & g, const SolveOptions & options = {}) -> Solution;

    /// All maximum packings of D, via the maximum independent sets of N⁻c(D).
    auto all_maximum_packings(const Digraph & d, std::size_t limit = 100'000, const SolveOptions & options = {})
        -> IndependentSetEnumeration;

    /// Greedy dominating set: repeatedly take the vertex covering most undominated vertices.
    auto greedy_dominating_set(const Digraph & d) -> VertexSet;

    struct DominatingPartition
    {
        /// optimal: found; infeasible: proven not to exist; timeout: unknown.
        SolveStatus status = SolveStatus::timeout;
        VertexSet first, second;
    };

    /**
     * Partitions V(D) into two dominating sets by backtracking over vertices in
     * index order, the first vertex always going to the first side. With
     * require_minimum both sides must be minimum dominating sets, so n = 2γ.
     */
    auto partition_two_dominating_sets(const Digraph & d, bool require_minimum, const SolveOptions & options = {})
        -> DominatingPartition;

    /// All invariants of one digraph with witnesses.
    struct InvariantReport
    {
        std::string id;
        std::size_t order = 0;
        std::size_t arcs = 0;
        Solution gamma;
        std::optional<Solution> gamma_t;
        Solution rho;
        Solution rho_open;
    };

    auto compute_invariants(const Digraph & d, const std::string & id, const SolveOptions & options = {}) -> InvariantReport;

    /// One JSON object. Witnesses are sorted index arrays; when d has labels they are also given by label.
    auto to_json(const InvariantReport & report, const Digraph & d, bool include_timing = true) -> nlohmann::json;
}

#endif
