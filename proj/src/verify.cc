#include <digdom/arc_list.hh>
#include <digdom/auxgraph.hh>
#include <digdom/families.hh>
#include <digdom/products.hh>
#include <digdom/validate.hh>
#include <digdom/verify.hh>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace digdom;

using nlohmann::json;
using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace
{
    auto ll(size_t x) -> long long { return static_cast<long long>(x); }

    auto ceil_half(size_t x) -> size_t { return (x + 1) / 2; }

    struct Stopwatch
    {
        Clock::time_point start = Clock::now();
        auto stop(VerificationRecord & r) const -> void { r.elapsed = Clock::now() - start; }
    };

    auto new_record(Claim claim, const string & instance) -> VerificationRecord
    {
        VerificationRecord r;
        r.claim = claim;
        r.instance = instance;
        return r;
    }

    /// γ and ρ of one factor, exact.
    struct Factor
    {
        Solution gamma, rho;
        auto solved() const -> bool { return gamma.solved() && rho.solved(); }
    };

    auto factor_values(const Digraph & d, const CheckOptions & options) -> Factor
    {
        return {domination_number(d, options.solve_options()), packing_number(d, options.solve_options())};
    }

    auto record_factor(VerificationRecord & r, const string & name, const Factor & f) -> void
    {
        r.values["gamma_" + name] = ll(f.gamma.value());
        r.values["rho_" + name] = ll(f.rho.value());
    }

    /// The larger of the packing bound and the half bound for γ(G □ H).
    auto theorem_lower_bound(const Factor & g, const Factor & h) -> size_t
    {
        auto gg = g.gamma.value(), gh = h.gamma.value();
        auto packing = std::max(gg * h.rho.value(), gh * g.rho.value());
        auto half = ceil_half(gg * gh + std::max(gg, gh));
        return std::max(packing, half);
    }

    auto record_product(VerificationRecord & r, const ProductDomination & p) -> void
    {
        r.values["product_lower"] = ll(p.lower);
        r.values["product_upper"] = ll(p.upper);
        r.values["product_exact"] = p.exact ? 1 : 0;
        if (p.witness.capacity() > 0)
            r.add_witness("product_dominating_set", p.witness);
    }

    /// Decides lhs >= rhs from an exact value or a bound pair.
    auto decide_at_least(VerificationRecord & r, const ProductDomination & p, size_t rhs, const Digraph & product) -> void
    {
        r.rhs = ll(rhs);
        if (auto v = p.value())
            r.lhs = ll(*v);
        if (p.upper < rhs) {
            if (! is_dominating_set(product, p.witness))
                throw std::logic_error("product witness does not dominate");
            r.lhs = ll(p.upper);
            r.verdict = Verdict::fails;
            r.note = "dominating set of the product smaller than the bound";
        }
        else if (p.lower >= rhs)
            r.verdict = Verdict::holds;
        else {
            r.verdict = Verdict::timeout;
            r.note = p.timed_out ? "product solve timed out" : "bounds do not decide the inequality";
        }
    }

    auto product_of(const Digraph & g, const Digraph & h) -> Digraph { return cartesian_product(g, h).digraph; }
}

auto digdom::bound_product_domination(const Digraph & g, const Digraph & h, size_t lower_bound,
    const optional<VertexSet> & hint, const CheckOptions & options) -> ProductDomination
{
    auto product = cartesian_product(g, h).digraph;
    ProductDomination result;
    const size_t n = product.order();
    size_t counting = (n + max_out_degree(product)) / (max_out_degree(product) + 1);

    if (hint && (hint->capacity() != n || ! is_dominating_set(product, *hint)))
        throw std::invalid_argument("supplied product witness is not a dominating set");

    if (n <= options.exact_threshold) {
        auto s = domination_number(product, options.solve_options());
        result.witness = s.witness;
        result.upper = s.value();
        if (s.solved()) {
            result.exact = s.value();
            result.lower = s.value();
        }
        else {
            result.timed_out = true;
            result.lower = std::max(lower_bound, counting);
        }
    }
    else {
        auto greedy = greedy_dominating_set(product);
        result.witness = hint && hint->count() <= greedy.count() ? *hint : greedy;
        result.upper = result.witness.count();
        result.lower = std::max(lower_bound, counting);
    }
    if (hint && hint->count() < result.upper) {
        result.witness = *hint;
        result.upper = hint->count();
    }
    return result;
}

auto digdom::check_meir_moon(const UndirectedGraph & t, const string & instance, const CheckOptions & options)
    -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::meir_moon, instance);
    r.hypotheses_met = is_tree(t);
    auto gamma = undirected_domination_number(t, options.solve_options());
    auto rho2 = two_packing_number(t, options.solve_options());
    r.lhs = ll(rho2.value());
    r.rhs = ll(gamma.value());
    r.add_witness("two_packing", rho2.witness);
    r.add_witness("dominating_set", gamma.witness);
    if (! gamma.solved() || ! rho2.solved())
        r.verdict = Verdict::timeout;
    else if (! r.hypotheses_met)
        r.verdict = Verdict::hypothesis_not_met;
    else
        r.verdict = *r.lhs == *r.rhs ? Verdict::holds : Verdict::fails;
    clock.stop(r);
    return r;
}

auto digdom::check_packing_equals_domination(const Digraph & t, const string & instance, const CheckOptions & options)
    -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::packing_eq_domination, instance);
    r.hypotheses_met = is_ditree(t);
    auto f = factor_values(t, options);
    r.lhs = ll(f.rho.value());
    r.rhs = ll(f.gamma.value());
    r.add_witness("packing", f.rho.witness);
    r.add_witness("dominating_set", f.gamma.witness);
    if (! f.solved())
        r.verdict = Verdict::timeout;
    else if (! r.hypotheses_met) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = "not a ditree";
    }
    else
        r.verdict = *r.lhs == *r.rhs ? Verdict::holds : Verdict::fails;
    clock.stop(r);
    return r;
}

auto digdom::check_open_packing_equals_total_domination(const Digraph & t, const string & instance,
    const CheckOptions & options) -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::open_packing_eq_total_domination, instance);
    bool ditree = is_ditree(t);
    r.values["min_in_degree"] = ll(min_in_degree(t));
    r.hypotheses_met = ditree && min_in_degree(t) >= 1;
    auto rho_open = open_packing_number(t, options.solve_options());
    auto gamma_t = total_domination_number(t, options.solve_options());
    r.lhs = ll(rho_open.value());
    r.add_witness("open_packing", rho_open.witness);
    if (gamma_t) {
        r.rhs = ll(gamma_t->value());
        r.add_witness("total_dominating_set", gamma_t->witness);
    }
    if (! rho_open.solved() || (gamma_t && ! gamma_t->solved()))
        r.verdict = Verdict::timeout;
    else if (! r.hypotheses_met) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = ditree ? "minimum in-degree is 0" : "not a ditree";
    }
    else
        r.verdict = *r.lhs == *r.rhs ? Verdict::holds : Verdict::fails;
    clock.stop(r);
    return r;
}

auto digdom::check_total_domination_direct_product(const Digraph & g, const Digraph & h, const string & instance,
    const CheckOptions & options) -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::total_domination_direct_product, instance);
    r.values["min_in_degree_G"] = ll(min_in_degree(g));
    r.values["min_in_degree_H"] = ll(min_in_degree(h));
    if (min_in_degree(g) == 0 || min_in_degree(h) == 0) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = "a factor has minimum in-degree 0";
        clock.stop(r);
        return r;
    }

    auto opts = options.solve_options();
    auto gt_g = *total_domination_number(g, opts), gt_h = *total_domination_number(h, opts);
    auto ro_g = open_packing_number(g, opts), ro_h = open_packing_number(h, opts);
    r.values["gamma_t_G"] = ll(gt_g.value());
    r.values["gamma_t_H"] = ll(gt_h.value());
    r.values["rho_open_G"] = ll(ro_g.value());
    r.values["rho_open_H"] = ll(ro_h.value());
    if (! gt_g.solved() || ! gt_h.solved() || ! ro_g.solved() || ! ro_h.solved()) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }

    r.hypotheses_met = ro_g.value() == gt_g.value() || ro_h.value() == gt_h.value();
    size_t lower = std::max(ro_g.value() * gt_h.value(), ro_h.value() * gt_g.value());
    size_t upper = gt_g.value() * gt_h.value();
    r.values["sandwich_lower"] = ll(lower);
    r.values["sandwich_upper"] = ll(upper);
    r.rhs = ll(upper);

    auto product = direct_product(g, h);
    VertexSet witness(product.map.order());
    for (auto x : gt_g.witness)
        for (auto y : gt_h.witness)
            witness.set(product.map.flat(x, y));
    if (! is_total_dominating_set(product.digraph, witness))
        throw std::logic_error("product of total dominating sets is not total dominating");

    optional<size_t> value;
    if (product.digraph.order() <= options.exact_threshold) {
        auto exact = *total_domination_number(product.digraph, opts);
        if (! exact.solved()) {
            r.verdict = Verdict::timeout;
            r.note = "product solve timed out";
            clock.stop(r);
            return r;
        }
        value = exact.value();
        witness = exact.witness;
    }
    else if (lower == upper)
        value = upper;
    r.add_witness("total_dominating_set", witness);
    r.values["product_exact"] = product.digraph.order() <= options.exact_threshold ? 1 : 0;

    if (! value) {
        r.verdict = Verdict::timeout;
        r.note = "bounds do not decide the product value";
    }
    else {
        r.lhs = ll(*value);
        if (*value < lower) {
            r.verdict = Verdict::fails;
            r.note = "total domination number below the open packing bound";
            r.add_witness("open_packing_G", ro_g.witness);
            r.add_witness("open_packing_H", ro_h.witness);
        }
        else if (! r.hypotheses_met) {
            r.verdict = Verdict::hypothesis_not_met;
            r.note = "neither factor has equal open packing and total domination numbers";
        }
        else
            r.verdict = *value == upper ? Verdict::holds : Verdict::fails;
    }
    clock.stop(r);
    return r;
}

auto digdom::check_packing_lower_bound(const Digraph & g, const Digraph & h, const string & instance,
    const CheckOptions & options, const optional<VertexSet> & hint) -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::packing_lower_bound, instance);
    r.hypotheses_met = true;
    auto fg = factor_values(g, options), fh = factor_values(h, options);
    record_factor(r, "G", fg);
    record_factor(r, "H", fh);
    if (! fg.solved() || ! fh.solved()) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }
    auto p = bound_product_domination(g, h, theorem_lower_bound(fg, fh), hint, options);
    record_product(r, p);
    size_t rhs = std::max(fg.gamma.value() * fh.rho.value(), fh.gamma.value() * fg.rho.value());
    decide_at_least(r, p, rhs, product_of(g, h));
    clock.stop(r);
    return r;
}

auto digdom::check_vizing_inequality(const Digraph & g, const Digraph & h, const string & instance,
    const CheckOptions & options, const optional<VertexSet> & hint) -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::vizing_inequality, instance);
    r.hypotheses_met = true;
    auto fg = factor_values(g, options), fh = factor_values(h, options);
    record_factor(r, "G", fg);
    record_factor(r, "H", fh);
    if (! fg.solved() || ! fh.solved()) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }
    auto p = bound_product_domination(g, h, theorem_lower_bound(fg, fh), hint, options);
    record_product(r, p);
    decide_at_least(r, p, fg.gamma.value() * fh.gamma.value(), product_of(g, h));
    if (r.verdict == Verdict::fails)
        r.note = "product domination number below the product of the factors";
    clock.stop(r);
    return r;
}

auto digdom::check_half_vizing_bound(const Digraph & g, const Digraph & h, const string & instance,
    const CheckOptions & options, const optional<VertexSet> & hint) -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::half_vizing_bound, instance);
    r.hypotheses_met = true;
    auto fg = factor_values(g, options), fh = factor_values(h, options);
    record_factor(r, "G", fg);
    record_factor(r, "H", fh);
    if (! fg.solved() || ! fh.solved()) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }
    auto gg = fg.gamma.value(), gh = fh.gamma.value();
    size_t twice_rhs = gg * gh + std::max(gg, gh);
    auto p = bound_product_domination(g, h, theorem_lower_bound(fg, fh), hint, options);
    record_product(r, p);
    decide_at_least(r, p, ceil_half(twice_rhs), product_of(g, h));
    r.values["twice_rhs"] = ll(twice_rhs);
    if (r.lhs)
        r.values["twice_slack"] = 2 * *r.lhs - ll(twice_rhs);
    clock.stop(r);
    return r;
}

auto digdom::check_Gm_vizing_failure(size_t m, const CheckOptions & options) -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::gm_vizing_failure, "Gm:" + std::to_string(m));
    r.hypotheses_met = true;
    auto gm = gen_G_m(m);
    auto product = product_of(gm, gm);
    auto s = gm_square_witness(m);
    bool dominates = is_dominating_set(product, s);
    auto gamma = domination_number(gm, options.solve_options());
    r.add_witness("S", s);
    r.values["S_size"] = ll(s.count());
    r.values["formula"] = ll(m * m + 2 * m);
    r.values["S_dominates"] = dominates ? 1 : 0;
    r.values["gamma_Gm"] = ll(gamma.value());
    r.rhs = ll(gamma.value() * gamma.value());
    r.lhs = ll(s.count());
    if (! gamma.solved()) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }

    bool ok = dominates && s.count() == m * m + 2 * m && ll(s.count()) < *r.rhs;
    if (m <= 3) {
        auto exact = domination_number(product, options.solve_options());
        if (! exact.solved()) {
            r.verdict = Verdict::timeout;
            r.note = "product solve timed out";
            clock.stop(r);
            return r;
        }
        r.values["gamma_product"] = ll(exact.value());
        r.add_witness("minimum_dominating_set", exact.witness);
        r.lhs = ll(exact.value());
        ok = ok && exact.value() <= s.count() && ll(exact.value()) < *r.rhs;
    }
    r.verdict = ok ? Verdict::holds : Verdict::fails;
    if (! dominates)
        r.note = "the constructed set does not dominate";
    clock.stop(r);
    return r;
}

auto digdom::check_C4_equality(const Digraph & g, const string & instance, const CheckOptions & options)
    -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::c4_equality, instance);
    auto c4 = gen_C4_orientation("0202");
    auto opts = options.solve_options();
    auto any = partition_two_dominating_sets(g, false, opts);
    if (any.status == SolveStatus::timeout) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }
    if (any.status == SolveStatus::infeasible) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = "no partition into two dominating sets";
        clock.stop(r);
        return r;
    }

    auto product = cartesian_product(g, c4);
    auto minimum = partition_two_dominating_sets(g, true, opts);
    if (minimum.status == SolveStatus::timeout) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }
    r.hypotheses_met = minimum.status == SolveStatus::optimal;
    auto & partition = r.hypotheses_met ? minimum : any;
    r.add_witness("A", partition.first);
    r.add_witness("B", partition.second);

    auto lemma = c4_partition_witness(product.map, partition.first, partition.second);
    r.add_witness("lemma_witness", lemma);
    if (! is_dominating_set(product.digraph, lemma)) {
        r.verdict = Verdict::fails;
        r.note = "the partition witness does not dominate the product";
        clock.stop(r);
        return r;
    }

    auto fg = factor_values(g, options), fc = factor_values(c4, options);
    record_factor(r, "G", fg);
    record_factor(r, "C4", fc);
    r.values["order_G"] = ll(g.order());
    auto p = bound_product_domination(g, c4, theorem_lower_bound(fg, fc), lemma, options);
    record_product(r, p);
    r.rhs = ll(fg.gamma.value() * fc.gamma.value());
    if (auto v = p.value())
        r.lhs = ll(*v);

    if (! r.hypotheses_met) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = "no partition into two minimum dominating sets";
    }
    else if (! r.lhs)
        r.verdict = Verdict::timeout;
    else
        r.verdict = *r.lhs == *r.rhs ? Verdict::holds : Verdict::fails;
    clock.stop(r);
    return r;
}

auto digdom::check_strong_support_condition(const Digraph & t, const Digraph & g, const string & instance,
    const CheckOptions & options, const optional<VertexSet> & hint) -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::strong_support_condition, instance);
    bool ditree = is_ditree(t), connected = underlying_connected(g);
    r.hypotheses_met = ditree && connected;
    auto offending = strong_supports_with_two_non_isolated_leaves(t);
    r.values["offending_supports"] = ll(offending.count());
    if (offending.any())
        r.add_witness("offending_supports", offending);

    auto ft = factor_values(t, options), fg = factor_values(g, options);
    record_factor(r, "T", ft);
    record_factor(r, "G", fg);
    if (! ft.solved() || ! fg.solved()) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }
    auto p = bound_product_domination(t, g, theorem_lower_bound(ft, fg), hint, options);
    record_product(r, p);
    size_t rhs = ft.gamma.value() * fg.gamma.value();
    r.rhs = ll(rhs);
    if (auto v = p.value())
        r.lhs = ll(*v);

    // ditrees satisfy the product inequality, so equality is exactly upper <= rhs
    optional<bool> equality;
    if (p.value())
        equality = *p.value() == rhs;
    else if (ditree && p.upper <= rhs)
        equality = true;
    else if (p.lower > rhs)
        equality = false;
    if (equality)
        r.values["equality"] = *equality ? 1 : 0;

    if (! r.hypotheses_met) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = ditree ? "underlying graph of G is disconnected" : "T is not a ditree";
    }
    else if (offending.empty()) {
        r.verdict = Verdict::holds;
        r.note = "no strong support with two non-isolated leaves";
    }
    else if (! equality)
        r.verdict = Verdict::timeout;
    else if (*equality) {
        if (! is_dominating_set(product_of(t, g), p.witness))
            throw std::logic_error("product witness does not dominate");
        r.verdict = Verdict::fails;
        r.note = "equality holds although T has a strong support with two non-isolated leaves";
    }
    else {
        r.verdict = Verdict::holds;
        r.note = "equality fails, as required";
    }
    clock.stop(r);
    return r;
}

auto digdom::attach_isolated_leaf(const Digraph & t, Vertex attach_at) -> Digraph
{
    if (attach_at >= t.order())
        throw std::out_of_range("attachment vertex " + std::to_string(attach_at) + " out of range");
    auto arcs = t.arcs();
    arcs.emplace_back(t.order(), attach_at);
    vector<string> labels;
    if (t.has_labels()) {
        labels = t.labels();
        labels.push_back("leaf");
    }
    return Digraph(t.order() + 1, arcs, labels);
}

auto digdom::check_isolated_leaf_extension(const Digraph & t, const Digraph & h, Vertex attach_at, const string & instance,
    const CheckOptions & options) -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::isolated_leaf_extension, instance);
    auto t2 = attach_isolated_leaf(t, attach_at);
    auto ft = factor_values(t, options), ft2 = factor_values(t2, options), fh = factor_values(h, options);
    record_factor(r, "T", ft);
    record_factor(r, "T_ext", ft2);
    record_factor(r, "H", fh);
    r.values["attach_at"] = ll(attach_at);
    if (! ft.solved() || ! ft2.solved() || ! fh.solved()) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }

    auto base = bound_product_domination(t, h, theorem_lower_bound(ft, fh), std::nullopt, options);
    auto extended = bound_product_domination(t2, h, theorem_lower_bound(ft2, fh), std::nullopt, options);
    record_product(r, extended);
    if (auto v = base.value())
        r.values["gamma_product_T"] = ll(*v);
    r.rhs = ll(ft2.gamma.value() * fh.gamma.value());
    if (auto v = extended.value())
        r.lhs = ll(*v);

    bool ditree = is_ditree(t);
    bool grows = ft2.gamma.value() == ft.gamma.value() + 1;
    if (! ditree || ! grows) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = ditree ? "domination number does not grow" : "T is not a ditree";
    }
    else if (! base.value())
        r.verdict = Verdict::timeout;
    else if (*base.value() != ft.gamma.value() * fh.gamma.value()) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = "T and H do not attain equality";
    }
    else {
        r.hypotheses_met = true;
        if (! r.lhs)
            r.verdict = Verdict::timeout;
        else
            r.verdict = *r.lhs == *r.rhs ? Verdict::holds : Verdict::fails;
    }
    clock.stop(r);
    return r;
}

auto digdom::check_max_packing_dominates(const Digraph & t1, const Digraph & t2, const string & instance,
    const CheckOptions & options) -> VerificationRecord
{
    if (! is_ditree(t1) || ! is_ditree(t2) || t1.order() < 3 || t2.order() < 3)
        throw std::invalid_argument("max_packing_dominates needs two ditrees of order at least 3");
    Stopwatch clock;
    auto r = new_record(Claim::max_packing_dominates, instance);
    auto f1 = factor_values(t1, options), f2 = factor_values(t2, options);
    record_factor(r, "T1", f1);
    record_factor(r, "T2", f2);
    if (! f1.solved() || ! f2.solved()) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }
    auto p = bound_product_domination(t1, t2, theorem_lower_bound(f1, f2), std::nullopt, options);
    record_product(r, p);
    r.rhs = ll(f1.gamma.value() * f2.gamma.value());
    optional<bool> equality;
    if (auto v = p.value()) {
        r.lhs = ll(*v);
        equality = ll(*v) == *r.rhs;
    }
    else if (ll(p.upper) <= *r.rhs)
        equality = true;
    if (! equality) {
        r.verdict = Verdict::timeout;
        clock.stop(r);
        return r;
    }
    if (! *equality) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = "the pair does not attain equality";
        clock.stop(r);
        return r;
    }
    r.hypotheses_met = true;

    struct FactorPackings
    {
        IndependentSetEnumeration packings;
        VertexSet isolated_leaves;
        bool all_contain_leaves = true;
        optional<VertexSet> missing_leaves;
    };
    auto examine = [&](const Digraph & t, const string & name) -> optional<FactorPackings> {
        FactorPackings f;
        f.packings = all_maximum_packings(t, options.packing_limit, options.solve_options());
        f.isolated_leaves = VertexSet(t.order());
        auto tags = classify_leaves(t);
        for (Vertex v = 0; v < t.order(); ++v)
            if (tags[v] & tag_isolated_leaf)
                f.isolated_leaves.set(v);
        r.values["max_packings_" + name] = ll(f.packings.sets.size());
        r.values["isolated_leaves_" + name] = ll(f.isolated_leaves.count());
        auto un = underlying_graph(t);
        for (auto & packing : f.packings.sets) {
            if (! is_packing(t, packing))
                throw std::logic_error("enumerated set is not a packing");
            if (! is_undirected_dominating_set(un, packing)) {
                r.add_witness("non_dominating_packing_" + name, packing);
                return std::nullopt;
            }
            if (! f.isolated_leaves.is_subset_of(packing) && f.all_contain_leaves) {
                f.all_contain_leaves = false;
                f.missing_leaves = packing;
            }
        }
        return f;
    };

    auto e1 = examine(t1, "T1");
    auto e2 = e1 ? examine(t2, "T2") : std::nullopt;
    if (! e1 || ! e2) {
        r.verdict = Verdict::fails;
        r.note = "a maximum packing does not dominate the underlying tree";
    }
    else if (e1->packings.status != SolveStatus::optimal || e2->packings.status != SolveStatus::optimal ||
        e1->packings.truncated || e2->packings.truncated) {
        r.verdict = Verdict::timeout;
        r.note = "maximum packing enumeration incomplete";
    }
    else if (! e1->all_contain_leaves && ! e2->all_contain_leaves) {
        r.verdict = Verdict::fails;
        r.note = "both factors have a maximum packing missing an isolated leaf";
        r.add_witness("packing_T1", *e1->missing_leaves);
        r.add_witness("packing_T2", *e2->missing_leaves);
    }
    else
        r.verdict = Verdict::holds;
    clock.stop(r);
    return r;
}

auto digdom::arc_spec(const Digraph & d) -> string
{
    string result = "arcs:" + std::to_string(d.order()) + ":";
    bool first = true;
    for (auto [u, v] : d.arcs()) {
        if (! first)
            result += ',';
        result += std::to_string(u) + ">" + std::to_string(v);
        first = false;
    }
    return result;
}

auto digdom::check_acyclic_packing(const Digraph & d, const string & instance, const CheckOptions & options)
    -> VerificationRecord
{
    Stopwatch clock;
    auto r = new_record(Claim::acyclic_packing_domination, instance.empty() ? arc_spec(d) : instance);
    r.hypotheses_met = is_acyclic_digraph(d);
    auto f = factor_values(d, options);
    r.lhs = ll(f.rho.value());
    r.rhs = ll(f.gamma.value());
    r.add_witness("packing", f.rho.witness);
    r.add_witness("dominating_set", f.gamma.witness);
    if (! f.solved())
        r.verdict = Verdict::timeout;
    else if (! r.hypotheses_met) {
        r.verdict = Verdict::hypothesis_not_met;
        r.note = "has a directed cycle";
    }
    else if (*r.lhs == *r.rhs)
        r.verdict = Verdict::holds;
    else {
        r.verdict = Verdict::fails;
        r.note = "counterexample: " + arc_spec(d);
    }
    clock.stop(r);
    return r;
}

auto digdom::search_acyclic_problem(const AcyclicSearch & search, const CheckOptions & options,
    const std::function<void(const VerificationRecord &)> & sink) -> void
{
    for (size_t n = 1; n <= search.exhaustive_max_n; ++n)
        for_each_dag(n, [&](const Digraph & d) { sink(check_acyclic_packing(d, "", options)); });

    Rng master(search.seed);
    for (size_t i = 0; i < search.random_count; ++i) {
        FamilySpec spec;
        spec.name = "dag";
        spec.params = {1 + master.below(search.random_max_n)};
        spec.density = static_cast<double>(5 + master.below(91)) / 100.0;
        spec.seed = master.next();
        auto r = check_acyclic_packing(make_family(spec), to_string(spec), options);
        r.seed = spec.seed;
        sink(r);
    }
}

namespace
{
    struct Instance
    {
        string id;
        Digraph digraph;
        optional<uint64_t> seed;
    };

    auto key_values(const string & body) -> std::map<string, string>
    {
        std::map<string, string> result;
        std::stringstream in(body);
        string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == string::npos)
                throw SuiteConfigError("expected key=value in source, got '" + item + "'");
            result[item.substr(0, eq)] = item.substr(eq + 1);
        }
        return result;
    }

    auto number(const std::map<string, string> & kv, const string & key, uint64_t fallback) -> uint64_t
    {
        auto it = kv.find(key);
        if (it == kv.end())
            return fallback;
        try {
            return std::stoull(it->second);
        }
        catch (const std::exception &) {
            throw SuiteConfigError("bad number for " + key + ": '" + it->second + "'");
        }
    }

    /// Expands one source token into concrete instances.
    auto expand_source(const string & source, uint64_t seed) -> vector<Instance>
    {
        vector<Instance> result;
        auto colon = source.find(':');
        string kind = source.substr(0, colon), body = colon == string::npos ? "" : source.substr(colon + 1);

        if (kind == "ditrees" || kind == "dags" || kind == "digraphs") {
            size_t n = std::stoul(body);
            auto add = [&](const Digraph & d) { result.push_back({arc_spec(d), d, std::nullopt}); };
            if (kind == "ditrees")
                for_each_ditree(n, add);
            else if (kind == "dags")
                for_each_dag(n, add);
            else
                for_each_digraph(n, add);
            return result;
        }
        if (kind == "file") {
            result.push_back({source, read_arc_list_file(body), std::nullopt});
            return result;
        }
        if (kind == "random-ditrees" || kind == "random-digraphs" || kind == "random-dags") {
            auto kv = key_values(body);
            for (auto & [key, _] : kv)
                if (key != "count" && key != "n" && key != "min_n" && key != "min_in" && key != "p" && key != "w")
                    throw SuiteConfigError("unknown key '" + key + "' in " + kind);
            auto count = number(kv, "count", 10);
            auto max_n = number(kv, "n", 8);
            auto min_n = number(kv, "min_n", 1);
            auto min_in = number(kv, "min_in", 0);
            if (min_n < 1 || min_n > max_n)
                throw SuiteConfigError(kind + " needs 1 <= min_n <= n");
            string family = kind == "random-ditrees" ? "ditree" : kind == "random-digraphs" ? "digraph" : "dag";
            Rng master(seed);
            for (uint64_t i = 0; i < count; ++i) {
                FamilySpec spec;
                spec.name = family;
                if (family == "ditree") {
                    if (kv.contains("w"))
                        spec.weights = parse_family_spec("ditree:n=1,w=" + kv.at("w")).weights;
                }
                else if (kv.contains("p"))
                    spec.density = parse_family_spec("digraph:n=1,p=" + kv.at("p")).density;
                else
                    spec.density = static_cast<double>(5 + master.below(91)) / 100.0;
                for (size_t attempt = 0;; ++attempt) {
                    if (attempt == 10'000)
                        throw SuiteConfigError(kind + ": could not meet min_in after 10000 draws");
                    spec.params = {min_n + master.below(max_n - min_n + 1)};
                    spec.seed = master.next();
                    auto d = make_family(spec);
                    if (min_in_degree(d) >= min_in) {
                        result.push_back({to_string(spec), d, spec.seed});
                        break;
                    }
                }
            }
            return result;
        }
        result.push_back({source, make_family(source), std::nullopt});
        return result;
    }

    auto spec_hint(const string & lhs, const string & rhs) -> optional<VertexSet>
    {
        try {
            if (lhs == "fig1G" && rhs == "fig1H")
                return fig1_witness();
            if (lhs == "K1star" && rhs == "path:4")
                return k1_star_path_witness();
            auto l = parse_family_spec(lhs), r = parse_family_spec(rhs);
            if (l.name == "Gm" && r.name == "Gm" && l.params == r.params)
                return gm_square_witness(l.params[0]);
            if (l.name == "Hm" && (r.name == "fig1G" || (r.name == "cycle" && r.params[0] == 3)))
                return hm_triangle_witness(l.params[0]);
        }
        catch (const FamilySpecError &) {
        }
        return std::nullopt;
    }

    auto is_pair_claim(Claim c) -> bool
    {
        switch (c) {
        case Claim::total_domination_direct_product:
        case Claim::packing_lower_bound:
        case Claim::vizing_inequality:
        case Claim::half_vizing_bound:
        case Claim::strong_support_condition:
        case Claim::max_packing_dominates: return true;
        default: return false;
        }
    }

    using Job = std::function<VerificationRecord()>;

    auto single_job(Claim claim, const Instance & i, const CheckOptions & options) -> Job
    {
        return [=]() {
            VerificationRecord r;
            switch (claim) {
            case Claim::meir_moon: r = check_meir_moon(underlying_graph(i.digraph), i.id, options); break;
            case Claim::packing_eq_domination: r = check_packing_equals_domination(i.digraph, i.id, options); break;
            case Claim::open_packing_eq_total_domination:
                r = check_open_packing_equals_total_domination(i.digraph, i.id, options);
                break;
            case Claim::closed_helly:
                r = check_closed_helly_lemma(i.digraph);
                r.instance = i.id;
                break;
            case Claim::open_helly:
                r = check_open_helly_lemma(i.digraph);
                r.instance = i.id;
                break;
            case Claim::c4_equality: r = check_C4_equality(i.digraph, i.id, options); break;
            case Claim::acyclic_packing_domination: r = check_acyclic_packing(i.digraph, i.id, options); break;
            default: throw std::logic_error("not a single-instance claim");
            }
            r.seed = i.seed;
            return r;
        };
    }

    auto pair_job(Claim claim, const Instance & a, const Instance & b, const CheckOptions & options) -> Job
    {
        return [=]() {
            auto id = a.id + " | " + b.id;
            auto hint = spec_hint(a.id, b.id);
            VerificationRecord r;
            switch (claim) {
            case Claim::total_domination_direct_product:
                r = check_total_domination_direct_product(a.digraph, b.digraph, id, options);
                break;
            case Claim::packing_lower_bound: r = check_packing_lower_bound(a.digraph, b.digraph, id, options, hint); break;
            case Claim::vizing_inequality: r = check_vizing_inequality(a.digraph, b.digraph, id, options, hint); break;
            case Claim::half_vizing_bound: r = check_half_vizing_bound(a.digraph, b.digraph, id, options, hint); break;
            case Claim::strong_support_condition:
                r = check_strong_support_condition(a.digraph, b.digraph, id, options, hint);
                break;
            case Claim::max_packing_dominates: r = check_max_packing_dominates(a.digraph, b.digraph, id, options); break;
            default: throw std::logic_error("not a pair claim");
            }
            if (a.seed || b.seed)
                r.seed = a.seed ? a.seed : b.seed;
            return r;
        };
    }

    auto expand_task(const SuiteTask & task, size_t index, const SuiteConfig & config) -> vector<Job>
    {
        vector<Job> jobs;
        auto source_seed = [&](size_t s) { return config.seed * 1'000'003 + index * 101 + s; };
        auto need = [&](size_t count, const string & shape) {
            if (task.sources.size() != count)
                throw SuiteConfigError(to_string(task.claim) + " expects " + shape);
        };

        if (task.claim == Claim::gm_vizing_failure) {
            if (task.sources.empty())
                throw SuiteConfigError("gm_vizing_failure expects one or more values of m");
            for (auto & s : task.sources) {
                size_t m = 0;
                try {
                    m = std::stoul(s);
                }
                catch (const std::exception &) {
                    throw SuiteConfigError("gm_vizing_failure expects integers, got '" + s + "'");
                }
                auto options = config.options;
                jobs.push_back([=]() { return check_Gm_vizing_failure(m, options); });
            }
        }
        else if (task.claim == Claim::isolated_leaf_extension) {
            need(3, "<T> <H> <vertex>");
            auto ts = expand_source(task.sources[0], source_seed(0));
            auto hs = expand_source(task.sources[1], source_seed(1));
            Vertex at = std::stoul(task.sources[2]);
            for (auto & t : ts)
                for (auto & h : hs) {
                    auto options = config.options;
                    auto id = t.id + " +leaf@" + std::to_string(at) + " | " + h.id;
                    jobs.push_back([=]() { return check_isolated_leaf_extension(t.digraph, h.digraph, at, id, options); });
                }
        }
        else if (is_pair_claim(task.claim)) {
            need(2, "<lhs source> <rhs source>");
            auto as = expand_source(task.sources[0], source_seed(0));
            auto bs = expand_source(task.sources[1], source_seed(1));
            for (auto & a : as)
                for (auto & b : bs)
                    jobs.push_back(pair_job(task.claim, a, b, config.options));
        }
        else {
            if (task.sources.empty())
                throw SuiteConfigError(to_string(task.claim) + " expects at least one source");
            for (size_t s = 0; s < task.sources.size(); ++s)
                for (auto & i : expand_source(task.sources[s], source_seed(s)))
                    jobs.push_back(single_job(task.claim, i, config.options));
        }
        return jobs;
    }

    auto trim(const string & s) -> string
    {
        auto b = s.find_first_not_of(" \t\r");
        if (b == string::npos)
            return "";
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }
}

auto digdom::parse_suite_config(std::istream & in) -> SuiteConfig
{
    SuiteConfig config;
    string line;
    size_t number = 0;
    auto fail = [&](const string & msg) { throw SuiteConfigError("line " + std::to_string(number) + ": " + msg); };
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == string::npos)
            fail("expected key = value");
        auto key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        try {
            if (key == "seed")
                config.seed = std::stoull(value);
            else if (key == "timeout_ms")
                config.options.timeout = std::chrono::milliseconds(std::stoll(value));
            else if (key == "exact_threshold")
                config.options.exact_threshold = std::stoul(value);
            else if (key == "jobs")
                config.jobs = std::max(1ul, std::stoul(value));
            else if (key == "packing_limit")
                config.options.packing_limit = std::stoul(value);
            else if (key == "task") {
                std::stringstream words(value);
                string claim;
                words >> claim;
                SuiteTask task{claim_from_string(claim), {}};
                for (string w; words >> w;)
                    task.sources.push_back(w);
                config.tasks.push_back(std::move(task));
            }
            else
                fail("unknown key '" + key + "'");
        }
        catch (const SuiteConfigError &) {
            throw;
        }
        catch (const std::exception & e) {
            fail(string("bad value for ") + key + ": " + e.what());
        }
    }
    return config;
}

auto digdom::parse_suite_config_text(const string & text) -> SuiteConfig
{
    std::istringstream in(text);
    return parse_suite_config(in);
}

auto digdom::default_suite_text() -> const string &
{
    static const string text = R"(# every claim at least once
seed = 1
timeout_ms = 60000
exact_threshold = 64
jobs = 1

task = meir_moon path:4 arcs:4:0>1,0>2,0>3 random-ditrees:count=100,n=14
task = packing_eq_domination K1star fig1G ditrees:4
task = open_packing_eq_total_domination path:4 ditrees:4
task = closed_helly path:4 random-ditrees:count=50,n=20
task = open_helly random-ditrees:count=50,n=20,w=0/0/1
task = total_domination_direct_product cycle:3 cycle:3
task = total_domination_direct_product cycle:3 cycle:4
task = total_domination_direct_product path:3 random-digraphs:count=10,n=6,min_in=1
task = packing_lower_bound fig1G fig1H
task = packing_lower_bound random-digraphs:count=5,n=6 random-digraphs:count=4,n=6
task = vizing_inequality fig1G fig1H
task = vizing_inequality cycle:4 cycle:4
task = vizing_inequality K1star path:4
task = half_vizing_bound cycle:3 cycle:3
task = half_vizing_bound Hm:3 fig1G
task = half_vizing_bound random-digraphs:count=5,n=6 random-digraphs:count=4,n=6
task = gm_vizing_failure 1 2 3 4 5 6
task = c4_equality fig5D corona:d/dd arcs:2
task = strong_support_condition K1star path:4
task = strong_support_condition arcs:3:0>1,0>2 path:2
task = isolated_leaf_extension K1star path:4 1
task = isolated_leaf_extension arcs:4:0>1,0>2,3>0 path:2 3
task = max_packing_dominates K1star path:4
task = acyclic_packing_domination C4:0202 dags:4 random-dags:count=200,n=9
)";
    return text;
}

auto digdom::run_suite(const SuiteConfig & config, const std::function<void(const VerificationRecord &)> & sink,
    const std::function<void(const string &)> & on_error) -> SuiteSummary
{
    vector<Job> jobs;
    for (size_t t = 0; t < config.tasks.size(); ++t)
        for (auto & job : expand_task(config.tasks[t], t, config))
            jobs.push_back(std::move(job));

    vector<optional<VerificationRecord>> records(jobs.size());
    vector<string> errors(jobs.size());
    vector<char> done(jobs.size(), 0);
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<size_t> next{0};

    auto worker = [&]() {
        while (true) {
            size_t i = next++;
            if (i >= jobs.size())
                return;
            optional<VerificationRecord> r;
            string error;
            try {
                r = jobs[i]();
            }
            catch (const std::exception & e) {
                error = e.what();
            }
            std::lock_guard lock(mutex);
            records[i] = std::move(r);
            errors[i] = std::move(error);
            done[i] = 1;
            ready.notify_all();
        }
    };

    unsigned workers = std::max(1u, std::min<unsigned>(config.jobs, std::max<size_t>(jobs.size(), 1)));
    vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back(worker);

    SuiteSummary summary;
    for (size_t i = 0; i < jobs.size(); ++i) {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return done[i] != 0; });
        auto r = std::move(records[i]);
        auto error = std::move(errors[i]);
        lock.unlock();
        if (r) {
            ++summary.records;
            ++summary.verdicts[r->verdict];
            ++summary.per_claim[to_string(r->claim)];
            if (r->verdict == Verdict::fails && claim_is_theorem(r->claim))
                ++summary.theorem_failures;
            sink(*r);
        }
        else {
            ++summary.errors;
            if (on_error)
                on_error(error);
        }
    }
    for (auto & t : threads)
        t.join();
    return summary;
}

auto digdom::summary_json(const SuiteSummary & summary) -> json
{
    json j;
    j["records"] = summary.records;
    j["errors"] = summary.errors;
    j["theorem_failures"] = summary.theorem_failures;
    j["verdicts"] = json::object();
    for (auto v : {Verdict::holds, Verdict::fails, Verdict::hypothesis_not_met, Verdict::timeout}) {
        auto it = summary.verdicts.find(v);
        j["verdicts"][to_string(v)] = it == summary.verdicts.end() ? 0 : it->second;
    }
    j["claims"] = summary.per_claim;
    return j;
}
