#include <digdom/record.hh>

#include <json.hpp>

#include <stdexcept>

using namespace digdom;

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    const std::vector<std::pair<Claim, const char *>> claim_names = {
        {Claim::meir_moon, "meir_moon"},
        {Claim::packing_eq_domination, "packing_eq_domination"},
        {Claim::open_packing_eq_total_domination, "open_packing_eq_total_domination"},
        {Claim::closed_helly, "closed_helly"},
        {Claim::open_helly, "open_helly"},
        {Claim::total_domination_direct_product, "total_domination_direct_product"},
        {Claim::packing_lower_bound, "packing_lower_bound"},
        {Claim::vizing_inequality, "vizing_inequality"},
        {Claim::half_vizing_bound, "half_vizing_bound"},
        {Claim::gm_vizing_failure, "gm_vizing_failure"},
        {Claim::c4_equality, "c4_equality"},
        {Claim::strong_support_condition, "strong_support_condition"},
        {Claim::isolated_leaf_extension, "isolated_leaf_extension"},
        {Claim::max_packing_dominates, "max_packing_dominates"},
        {Claim::acyclic_packing_domination, "acyclic_packing_domination"}};
}

auto digdom::all_claims() -> const vector<Claim> &
{
    static const vector<Claim> claims = [] {
        vector<Claim> result;
        for (auto & [c, _] : claim_names)
            result.push_back(c);
        return result;
    }();
    return claims;
}

auto digdom::to_string(Claim c) -> string
{
    for (auto & [claim, name] : claim_names)
        if (claim == c)
            return name;
    throw std::logic_error("unnamed claim");
}

auto digdom::claim_from_string(const string & s) -> Claim
{
    for (auto & [claim, name] : claim_names)
        if (s == name)
            return claim;
    throw std::invalid_argument("unknown claim id '" + s + "'");
}

auto digdom::claim_is_theorem(Claim c) -> bool
{
    return c != Claim::vizing_inequality && c != Claim::acyclic_packing_domination;
}

auto digdom::to_string(Verdict v) -> string
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
    case Verdict::timeout: return "timeout";
    }
    throw std::logic_error("unnamed verdict");
}

auto digdom::verdict_from_string(const string & s) -> Verdict
{
    for (auto v : {Verdict::holds, Verdict::fails, Verdict::hypothesis_not_met, Verdict::timeout})
        if (to_string(v) == s)
            return v;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

auto digdom::to_json(const VerificationRecord & r, bool include_timing) -> json
{
    json j;
    j["claim"] = to_string(r.claim);
    j["instance"] = r.instance;
    j["hypotheses_met"] = r.hypotheses_met;
    j["lhs"] = r.lhs ? json(*r.lhs) : json(nullptr);
    j["rhs"] = r.rhs ? json(*r.rhs) : json(nullptr);
    j["verdict"] = to_string(r.verdict);
    j["witnesses"] = json::object();
    for (auto & [name, members] : r.witnesses)
        j["witnesses"][name] = members;
    j["values"] = json::object();
    for (auto & [name, value] : r.values)
        j["values"][name] = value;
    if (! r.note.empty())
        j["note"] = r.note;
    j["elapsed_ms"] = include_timing ? std::chrono::duration<double, std::milli>(r.elapsed).count() : 0.0;
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    return j;
}

auto digdom::record_from_json(const json & j) -> VerificationRecord
{
    VerificationRecord r;
    r.claim = claim_from_string(j.at("claim").get<string>());
    r.instance = j.at("instance").get<string>();
    r.hypotheses_met = j.at("hypotheses_met").get<bool>();
    if (! j.at("lhs").is_null())
        r.lhs = j.at("lhs").get<long long>();
    if (! j.at("rhs").is_null())
        r.rhs = j.at("rhs").get<long long>();
    r.verdict = verdict_from_string(j.at("verdict").get<string>());
    for (auto & [name, members] : j.at("witnesses").items())
        r.witnesses[name] = members.get<vector<Vertex>>();
    if (j.contains("values"))
        for (auto & [name, value] : j.at("values").items())
            r.values[name] = value.get<long long>();
    if (j.contains("note"))
        r.note = j.at("note").get<string>();
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::duration<double, std::milli>(j.at("elapsed_ms").get<double>()));
    if (! j.at("seed").is_null())
        r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

auto digdom::to_json_line(const VerificationRecord & r, bool include_timing) -> string
{
    return to_json(r, include_timing).dump();
}
