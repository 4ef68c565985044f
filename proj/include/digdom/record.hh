#ifndef DIGDOM_RECORD_HH
#define DIGDOM_RECORD_HH

#include <digdom/vertex_set.hh>

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace digdom
{
    enum class Claim
    {
        meir_moon,
        packing_eq_domination,
        open_packing_eq_total_domination,
        closed_helly,
        open_helly,
        total_domination_direct_product,
        packing_lower_bound,
        vizing_inequality,
        half_vizing_bound,
        gm_vizing_failure,
        c4_equality,
        strong_support_condition,
        isolated_leaf_extension,
        max_packing_dominates,
        acyclic_packing_domination
    };

    auto all_claims() -> const std::vector<Claim> &;
    auto to_string(Claim c) -> std::string;
    auto claim_from_string(const std::string & s) -> Claim;

    /// Whether a "fails" verdict for this claim contradicts a proven result.
    /// Vizing's inequality and the acyclic packing question are exploratory.
    auto claim_is_theorem(Claim c) -> bool;

    enum class Verdict
    {
        holds,
        fails,
        hypothesis_not_met,
        timeout
    };

    auto to_string(Verdict v) -> std::string;
    auto verdict_from_string(const std::string & s) -> Verdict;

    /// Outcome of checking one claim on one instance.
    struct VerificationRecord
    {
        Claim claim = Claim::meir_moon;
        std::string instance;
        bool hypotheses_met = false;
        std::optional<long long> lhs, rhs;
        Verdict verdict = Verdict::hypothesis_not_met;
        std::map<std::string, std::vector<Vertex>> witnesses;
        std::map<std::string, long long> values;
        std::string note;
        std::chrono::nanoseconds elapsed{0};
        std::optional<std::uint64_t> seed;

        auto add_witness(const std::string & name, const VertexSet & set) -> void { witnesses[name] = set.to_vector(); }
    };

    auto to_json(const VerificationRecord & r, bool include_timing = true) -> nlohmann::json;
    auto record_from_json(const nlohmann::json & j) -> VerificationRecord;
    /// One compact JSON object, no trailing newline.
    auto to_json_line(const VerificationRecord & r, bool include_timing = true) -> std::string;
}

#endif
