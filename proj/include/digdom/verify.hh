#ifndef DIGDOM_VERIFY_HH
#define DIGDOM_VERIFY_HH

#include <digdom/digraph.hh>
#include <digdom/record.hh>
#include <digdom/solvers.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace digdom
{
    struct CheckOptions
    {
        std::chrono::milliseconds timeout{60'000};
        /// Products with more vertices than this are only bounded, not solved.
        std::size_t exact_threshold = 64;
        std::size_t packing_limit = 100'000;

        auto solve_options() const -> SolveOptions { return SolveOptions{timeout}; }
    };

    /// γ(G □ H) exactly when small enough, else an upper and lower bound.
    struct ProductDomination
    {
        std::optional<std::size_t> exact;
        std::size_t lower = 0, upper = 0;
        VertexSet witness;
        bool timed_out = false;

        auto pinned() const -> bool { return exact || lower == upper; }
        auto value() const -> std::optional<std::size_t> { return exact ? exact : (lower == upper ? std::optional(upper) : std::nullopt); }
    };

    /// `hint` is a dominating set of the product used as the upper bound when the exact solve is skipped.
    auto bound_product_domination(const Digraph & g, const Digraph & h, std::size_t lower_bound,
        const std::optional<VertexSet> & hint, const CheckOptions & options) -> ProductDomination;

    auto check_meir_moon(const UndirectedGraph & t, const std::string & instance, const CheckOptions & options = {})
        -> VerificationRecord;
    auto check_packing_equals_domination(const Digraph & t, const std::string & instance, const CheckOptions & options = {})
        -> VerificationRecord;
    auto check_open_packing_equals_total_domination(const Digraph & t, const std::string & instance,
        const CheckOptions & options = {}) -> VerificationRecord;
    auto check_total_domination_direct_product(const Digraph & g, const Digraph & h, const std::string & instance,
        const CheckOptions & options = {}) -> VerificationRecord;
    auto check_packing_lower_bound(const Digraph & g, const Digraph & h, const std::string & instance,
        const CheckOptions & options = {}, const std::optional<VertexSet> & hint = std::nullopt) -> VerificationRecord;
    auto check_vizing_inequality(const Digraph & g, const Digraph & h, const std::string & instance,
        const CheckOptions & options = {}, const std::optional<VertexSet> & hint = std::nullopt) -> VerificationRecord;
    auto check_half_vizing_bound(const Digraph & g, const Digraph & h, const std::string & instance,
        const CheckOptions & options = {}, const std::optional<VertexSet> & hint = std::nullopt) -> VerificationRecord;
    auto check_Gm_vizing_failure(std::size_t m, const CheckOptions & options = {}) -> VerificationRecord;
    auto check_C4_equality(const Digraph & g, const std::string & instance, const CheckOptions & options = {})
        -> VerificationRecord;
    auto check_strong_support_condition(const Digraph & t, const Digraph & g, const std::string & instance,
        const CheckOptions & options = {}, const std::optional<VertexSet> & hint = std::nullopt) -> VerificationRecord;

    /// T' is T plus a new vertex n(T) with the single arc n(T) -> attach_at.
    auto attach_isolated_leaf(const Digraph & t, Vertex attach_at) -> Digraph;
    auto check_isolated_leaf_extension(const Digraph & t, const Digraph & h, Vertex attach_at, const std::string & instance,
        const CheckOptions & options = {}) -> VerificationRecord;

    /// Throws std::invalid_argument unless both factors are ditrees of order at least 3.
    auto check_max_packing_dominates(const Digraph & t1, const Digraph & t2, const std::string & instance,
        const CheckOptions & options = {}) -> VerificationRecord;

    /// ρ against γ on one acyclic digraph. Never asserts; ρ < γ is recorded as a counterexample.
    auto check_acyclic_packing(const Digraph & d, const std::string & instance, const CheckOptions & options = {})
        -> VerificationRecord;

    /// The family spec arcs:<n>:<u>><v>,... that rebuilds d.
    auto arc_spec(const Digraph & d) -> std::string;

    struct AcyclicSearch
    {
        std::size_t exhaustive_max_n = 4;
        std::size_t random_count = 10'000;
        std::size_t random_max_n = 9;
        std::uint64_t seed = 1;
    };

    /// Every DAG up to exhaustive_max_n vertices, then random DAGs with mixed densities.
    auto search_acyclic_problem(const AcyclicSearch & search, const CheckOptions & options,
        const std::function<void(const VerificationRecord &)> & sink) -> void;

    struct SuiteTask
    {
        Claim claim;
        std::vector<std::string> sources;
    };

    struct SuiteConfig
    {
        std::uint64_t seed = 1;
        CheckOptions options;
        unsigned jobs = 1;
        std::vector<SuiteTask> tasks;
    };

    class SuiteConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /**
     * Key-value text: `seed = N`, `timeout_ms = N`, `exact_threshold = N`,
     * `jobs = N`, and any number of `task = <claim> <source>...` lines.
     * `#` starts a comment.
     */
    auto parse_suite_config(std::istream & in) -> SuiteConfig;
    auto parse_suite_config_text(const std::string & text) -> SuiteConfig;
    auto default_suite_text() -> const std::string &;

    struct SuiteSummary
    {
        std::map<Verdict, std::size_t> verdicts;
        std::map<std::string, std::size_t> per_claim;
        std::size_t errors = 0;
        std::size_t theorem_failures = 0;
        std::size_t records = 0;
    };

    /// Expands every task, runs the instances on `jobs` workers and hands records to `sink` in task order.
    auto run_suite(const SuiteConfig & config, const std::function<void(const VerificationRecord &)> & sink,
        const std::function<void(const std::string &)> & on_error = {}) -> SuiteSummary;

    auto summary_json(const SuiteSummary & summary) -> nlohmann::json;
}

#endif
