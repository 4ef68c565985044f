#include <digdom/families.hh>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

using namespace digdom;

using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace
{
    auto index_labels(const string & prefix, size_t n, size_t first = 1) -> vector<string>
    {
        vector<string> labels;
        for (size_t i = 0; i < n; ++i)
            labels.push_back(prefix + std::to_string(i + first));
        return labels;
    }

    auto orient(vector<Arc> & arcs, Vertex from, Vertex to, EdgeOrientation o) -> void
    {
        if (o != EdgeOrientation::backward)
            arcs.emplace_back(from, to);
        if (o != EdgeOrientation::forward)
            arcs.emplace_back(to, from);
    }

    auto orientation_from_char(char c) -> EdgeOrientation
    {
        switch (c) {
        case 'f':
        case 'i': return EdgeOrientation::forward;
        case 'b':
        case 'o': return EdgeOrientation::backward;
        case 'd': return EdgeOrientation::both;
        }
        throw FamilySpecError(string("unknown orientation code '") + c + "'");
    }

    auto pick_orientation(Rng & rng, const std::array<double, 3> & weights) -> EdgeOrientation
    {
        double total = weights[0] + weights[1] + weights[2];
        if (! (total > 0) || std::any_of(weights.begin(), weights.end(), [](double w) { return w < 0; }))
            throw std::invalid_argument("orientation weights must be non-negative with a positive sum");
        double r = rng.unit() * total;
        if (r < weights[0])
            return EdgeOrientation::forward;
        if (r < weights[0] + weights[1])
            return EdgeOrientation::backward;
        return EdgeOrientation::both;
    }

    auto parse_count(const string & s, const string & what) -> size_t
    {
        size_t value = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
            throw FamilySpecError("expected a non-negative integer for " + what + ", got '" + s + "'");
        return value;
    }

    auto parse_real(const string & s, const string & what) -> double
    {
        double value = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
            throw FamilySpecError("expected a number for " + what + ", got '" + s + "'");
        return value;
    }

    auto format_real(double x) -> string
    {
        char buffer[64];
        auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
        return string(buffer, end);
    }

    auto split(const string & s, char sep) -> vector<string>
    {
        vector<string> parts;
        std::stringstream in(s);
        string part;
        while (std::getline(in, part, sep))
            parts.push_back(part);
        if (! s.empty() && s.back() == sep)
            parts.emplace_back();
        return parts;
    }

    auto parse_key_values(const string & body, const string & family) -> vector<std::pair<string, string>>
    {
        vector<std::pair<string, string>> result;
        for (auto & item : split(body, ',')) {
            auto eq = item.find('=');
            if (eq == string::npos)
                throw FamilySpecError(family + ": expected key=value, got '" + item + "'");
            result.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        }
        return result;
    }

    auto parse_arc_spec(const string & body) -> std::pair<size_t, vector<Arc>>
    {
        auto colon = body.find(':');
        auto n = parse_count(body.substr(0, colon), "arcs vertex count");
        vector<Arc> arcs;
        if (colon != string::npos && colon + 1 < body.size())
            for (auto & item : split(body.substr(colon + 1), ',')) {
                auto op = item.find_first_of(">=");
                if (op == string::npos)
                    throw FamilySpecError("arcs: expected u>v or u=v, got '" + item + "'");
                auto u = parse_count(item.substr(0, op), "arc tail");
                auto v = parse_count(item.substr(op + 1), "arc head");
                arcs.emplace_back(u, v);
                if (item[op] == '=')
                    arcs.emplace_back(v, u);
            }
        return {n, arcs};
    }

    const vector<string> k1_star_labels = {"a", "b", "c", "x", "c'", "b'", "a'"};
}

auto Rng::below(uint64_t bound) -> uint64_t
{
    if (bound == 0)
        throw std::invalid_argument("empty range");
    uint64_t threshold = (0 - bound) % bound;
    while (true) {
        auto r = _engine();
        if (r >= threshold)
            return r % bound;
    }
}

auto Rng::unit() -> double
{
    return static_cast<double>(_engine() >> 11) * 0x1.0p-53;
}

auto digdom::gen_oriented_cycle(size_t n) -> Digraph
{
    if (n < 3)
        throw std::invalid_argument("oriented cycle needs at least 3 vertices");
    vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, arcs, index_labels("v", n));
}

auto digdom::gen_G_m(size_t m) -> Digraph
{
    if (m < 1)
        throw std::invalid_argument("G_m needs m >= 1");
    // v_j is index j - 1
    vector<Arc> arcs;
    for (size_t i = 1; i <= m; ++i) {
        Vertex even = 2 * i - 1, odd = 2 * i;
        arcs.emplace_back(0, even);
        arcs.emplace_back(even, odd);
        arcs.emplace_back(odd, 0);
    }
    return Digraph(2 * m + 1, arcs, index_labels("v", 2 * m + 1));
}

auto digdom::gen_H_m(size_t k) -> Digraph
{
    if (k < 3)
        throw std::invalid_argument("H_m needs k >= 3");
    const size_t m = 3 * k;
    auto a = [](size_t i) -> Vertex { return 3 * (i - 1); };
    auto b = [](size_t i) -> Vertex { return 3 * (i - 1) + 1; };
    auto c = [](size_t i) -> Vertex { return 3 * (i - 1) + 2; };
    auto d = [m](size_t i) -> Vertex { return 3 * m + i - 1; };

    vector<Arc> arcs;
    for (size_t i = 1; i <= m; ++i) {
        arcs.emplace_back(a(i), b(i));
        arcs.emplace_back(b(i), c(i));
        arcs.emplace_back(c(i), a(i));
    }
    for (size_t i = 1; i <= k; ++i)
        for (auto source : {a(3 * i - 2), b(3 * i - 1), c(3 * i)})
            for (auto target : {d(3 * i - 2), d(3 * i - 1), d(3 * i)})
                arcs.emplace_back(source, target);
    for (size_t i = 1; i <= m; ++i)
        arcs.emplace_back(d(i), a((i + 3 - 1) % m + 1));

    vector<string> labels;
    for (size_t i = 1; i <= m; ++i)
        for (auto p : {"a", "b", "c"})
            labels.push_back(p + std::to_string(i));
    for (size_t i = 1; i <= m; ++i)
        labels.push_back("d" + std::to_string(i));
    return Digraph(4 * m, arcs, labels);
}

auto digdom::gen_C4_orientation(const string & variant) -> Digraph
{
    vector<Arc> arcs;
    if (variant == "0211")
        arcs = {{1, 0}, {1, 2}, {2, 3}, {3, 0}};
    else if (variant == "0121")
        arcs = {{1, 0}, {2, 1}, {2, 3}, {3, 0}};
    else if (variant == "0202")
        arcs = {{1, 0}, {1, 2}, {3, 2}, {3, 0}};
    else if (variant == "1111")
        arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    else
        throw std::invalid_argument("unknown C4 orientation '" + variant + "'");
    vector<string> labels = index_labels("v", 4, 0);
    if (variant == "0202") {
        labels[c4_u] = "u";
        labels[c4_v] = "v";
    }
    return Digraph(4, arcs, labels);
}

auto digdom::gen_bidirected_path(size_t n) -> Digraph
{
    if (n < 1)
        throw std::invalid_argument("path needs at least one vertex");
    vector<Arc> arcs;
    for (Vertex i = 0; i + 1 < n; ++i) {
        arcs.emplace_back(i, i + 1);
        arcs.emplace_back(i + 1, i);
    }
    return Digraph(n, arcs, index_labels("v", n));
}

auto digdom::gen_K1_star() -> Digraph
{
    return Digraph(7, vector<Arc>{{0, 1}, {1, 2}, {2, 1}, {2, 3}, {4, 3}, {5, 4}, {4, 5}, {6, 5}}, k1_star_labels);
}

auto digdom::gen_T_star(const Digraph & t) -> Digraph
{
    if (! is_ditree(t))
        throw std::invalid_argument("T* needs a ditree");
    auto copy = gen_K1_star().arcs();
    vector<Arc> arcs;
    vector<string> labels;
    for (Vertex v = 0; v < t.order(); ++v) {
        for (auto [p, q] : copy)
            arcs.emplace_back(7 * v + p, 7 * v + q);
        for (auto & name : k1_star_labels)
            labels.push_back(t.order() == 1 ? name : name + "." + t.label(v));
    }
    for (auto [u, v] : t.arcs())
        arcs.emplace_back(7 * u + k1_star_x, 7 * v + k1_star_x);
    if (t.order() > 1)
        for (Vertex v = 0; v < t.order(); ++v)
            labels[7 * v + k1_star_x] = t.label(v);
    return Digraph(7 * t.order(), arcs, labels);
}

auto digdom::gen_corona_digraph(const UndirectedGraph & tree, const vector<EdgeOrientation> & edges,
    const vector<EdgeOrientation> & leaves) -> Digraph
{
    if (! is_tree(tree))
        throw std::invalid_argument("corona base must be a tree");
    auto tree_edges = tree.edges();
    if (edges.size() != tree_edges.size() || leaves.size() != tree.order())
        throw std::invalid_argument("corona needs one orientation per base edge and per base vertex");
    const size_t n = tree.order();
    vector<Arc> arcs;
    for (size_t e = 0; e < tree_edges.size(); ++e)
        orient(arcs, tree_edges[e].first, tree_edges[e].second, edges[e]);
    for (Vertex v = 0; v < n; ++v)
        orient(arcs, v, n + v, leaves[v]);
    auto labels = index_labels("t", n, 0);
    for (Vertex v = 0; v < n; ++v)
        labels.push_back("l" + std::to_string(v));
    return Digraph(2 * n, arcs, labels);
}

auto digdom::gen_fig1_G() -> Digraph
{
    return Digraph(3, vector<Arc>{{0, 1}, {1, 2}, {2, 0}}, {"a", "b", "c"});
}

auto digdom::gen_fig1_H() -> Digraph
{
    return Digraph(5, vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 2}}, {"u", "v", "x", "y", "z"});
}

auto digdom::gen_fig5_D() -> Digraph
{
    return Digraph(6, vector<Arc>{{0, 1}, {1, 2}, {0, 3}, {3, 0}, {1, 4}, {2, 5}}, {"u", "v", "w", "x", "y", "z"});
}

auto digdom::gen_arcless(size_t n) -> Digraph
{
    if (n < 1)
        throw std::invalid_argument("arcless digraph needs at least one vertex");
    return Digraph(n, vector<Arc>{});
}

auto digdom::prufer_decode(size_t n, const vector<Vertex> & sequence) -> vector<Edge>
{
    if (n < 2)
        return {};
    if (sequence.size() != n - 2)
        throw std::invalid_argument("Prüfer sequence must have n - 2 entries");
    vector<size_t> degree(n, 1);
    for (auto v : sequence) {
        if (v >= n)
            throw std::invalid_argument("Prüfer entry out of range");
        ++degree[v];
    }
    vector<Edge> edges;
    edges.reserve(n - 1);
    for (auto v : sequence) {
        Vertex leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        edges.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
    }
    Vertex u = n, w = n;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            (u == n ? u : w) = v;
    edges.emplace_back(u, w);
    return edges;
}

auto digdom::random_ditree(size_t n, Rng & rng, std::array<double, 3> weights) -> Digraph
{
    if (n < 1)
        throw std::invalid_argument("ditree needs at least one vertex");
    vector<Vertex> sequence;
    for (size_t i = 0; i + 2 < n; ++i)
        sequence.push_back(rng.below(n));
    vector<Arc> arcs;
    for (auto [u, v] : prufer_decode(n, sequence))
        orient(arcs, u, v, pick_orientation(rng, weights));
    return Digraph(n, arcs);
}

auto digdom::random_ditree(size_t n, uint64_t seed, std::array<double, 3> weights) -> Digraph
{
    Rng rng(seed);
    return random_ditree(n, rng, weights);
}

auto digdom::random_digraph(size_t n, double p, Rng & rng) -> Digraph
{
    vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && rng.unit() < p)
                arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

auto digdom::random_dag(size_t n, double p, Rng & rng) -> Digraph
{
    vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    vector<Arc> arcs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (rng.unit() < p)
                arcs.emplace_back(order[i], order[j]);
    return Digraph(n, arcs);
}

auto digdom::ditree_count(size_t n) -> uint64_t
{
    if (n == 0)
        return 0;
    uint64_t count = 1;
    for (size_t i = 0; i + 2 < n; ++i)
        count *= n;
    for (size_t i = 0; i + 1 < n; ++i)
        count *= 3;
    return count;
}

auto digdom::for_each_ditree(size_t n, const std::function<void(const Digraph &)> & f, bool allow_large) -> void
{
    if (n < 1)
        throw std::invalid_argument("ditree needs at least one vertex");
    if (n > ditree_enumeration_limit && ! allow_large)
        throw std::invalid_argument("ditree enumeration is limited to n <= " + std::to_string(ditree_enumeration_limit));

    vector<Vertex> sequence(n >= 2 ? n - 2 : 0, 0);
    while (true) {
        auto edges = prufer_decode(n, sequence);
        vector<int> states(edges.size(), 0);
        while (true) {
            vector<Arc> arcs;
            for (size_t e = 0; e < edges.size(); ++e)
                orient(arcs, edges[e].first, edges[e].second, static_cast<EdgeOrientation>(states[e]));
            f(Digraph(n, arcs));

            size_t e = 0;
            while (e < states.size() && states[e] == 2)
                states[e++] = 0;
            if (e == states.size())
                break;
            ++states[e];
        }

        size_t i = 0;
        while (i < sequence.size() && sequence[i] == n - 1)
            sequence[i++] = 0;
        if (i == sequence.size())
            break;
        ++sequence[i];
    }
}

auto digdom::enumerate_ditrees(size_t n, bool allow_large) -> vector<Digraph>
{
    vector<Digraph> result;
    for_each_ditree(n, [&](const Digraph & d) { result.push_back(d); }, allow_large);
    return result;
}

auto digdom::for_each_digraph(size_t n, const std::function<void(const Digraph &)> & f) -> void
{
    if (n < 1 || n > 4)
        throw std::invalid_argument("exhaustive digraph enumeration handles 1 <= n <= 4");
    vector<Arc> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v)
                pairs.emplace_back(u, v);
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
        vector<Arc> arcs;
        for (size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u)
                arcs.push_back(pairs[i]);
        f(Digraph(n, arcs));
    }
}

auto digdom::for_each_dag(size_t n, const std::function<void(const Digraph &)> & f) -> void
{
    if (n < 1 || n > 5)
        throw std::invalid_argument("exhaustive DAG enumeration handles 1 <= n <= 5");
    // each unordered pair is absent or oriented one way; keep the acyclic results
    vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    vector<int> states(pairs.size(), 0);
    while (true) {
        vector<Arc> arcs;
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (states[i] == 1)
                arcs.emplace_back(pairs[i].first, pairs[i].second);
            else if (states[i] == 2)
                arcs.emplace_back(pairs[i].second, pairs[i].first);
        }
        Digraph d(n, arcs);
        if (is_acyclic_digraph(d))
            f(d);

        size_t i = 0;
        while (i < states.size() && states[i] == 2)
            states[i++] = 0;
        if (i == states.size())
            break;
        ++states[i];
    }
}

auto digdom::parse_family_spec(const string & text) -> FamilySpec
{
    FamilySpec spec;
    auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    string body = colon == string::npos ? "" : text.substr(colon + 1);
    bool has_body = colon != string::npos;

    auto single_count = [&](size_t minimum) {
        if (! has_body)
            throw FamilySpecError(spec.name + " needs a parameter, e.g. " + spec.name + ":" + std::to_string(minimum));
        auto value = parse_count(body, spec.name);
        if (value < minimum)
            throw FamilySpecError(spec.name + " parameter must be at least " + std::to_string(minimum));
        spec.params.push_back(value);
    };

    if (spec.name == "cycle")
        single_count(3);
    else if (spec.name == "Gm" || spec.name == "path" || spec.name == "arcless")
        single_count(1);
    else if (spec.name == "Hm")
        single_count(3);
    else if (spec.name == "C4") {
        if (body != "0211" && body != "0121" && body != "0202" && body != "1111")
            throw FamilySpecError("C4 variant must be one of 0211, 0121, 0202, 1111");
        spec.variant = body;
    }
    else if (spec.name == "K1star" || spec.name == "fig1G" || spec.name == "fig1H" || spec.name == "fig5D") {
        if (has_body)
            throw FamilySpecError(spec.name + " takes no parameters");
    }
    else if (spec.name == "Tstar") {
        if (! has_body)
            throw FamilySpecError("Tstar needs a base ditree spec, e.g. Tstar:path:2");
        spec.base = std::make_shared<const FamilySpec>(parse_family_spec(body));
    }
    else if (spec.name == "corona") {
        auto slash = body.find('/');
        if (slash == string::npos)
            throw FamilySpecError("corona expects <edge codes>/<leaf codes>, e.g. corona:ff/dii");
        auto edges = body.substr(0, slash), leaves = body.substr(slash + 1);
        if (leaves.empty() || edges.size() + 1 != leaves.size())
            throw FamilySpecError("corona over a path on n vertices needs n - 1 edge codes and n leaf codes");
        for (char c : edges)
            if (c != 'f' && c != 'b' && c != 'd')
                throw FamilySpecError("corona edge codes are f, b, d");
        for (char c : leaves)
            if (c != 'i' && c != 'o' && c != 'd')
                throw FamilySpecError("corona leaf codes are i, o, d");
        spec.variant = body;
    }
    else if (spec.name == "arcs") {
        parse_arc_spec(body);
        spec.variant = body;
    }
    else if (spec.name == "ditree" || spec.name == "digraph" || spec.name == "dag") {
        bool have_n = false;
        for (auto & [key, value] : parse_key_values(body, spec.name)) {
            if (key == "n") {
                spec.params = {parse_count(value, "n")};
                have_n = true;
            }
            else if (key == "seed")
                spec.seed = parse_count(value, "seed");
            else if (key == "w" && spec.name == "ditree") {
                auto parts = split(value, '/');
                if (parts.size() != 3)
                    throw FamilySpecError("ditree weights are w=forward/backward/both");
                for (size_t i = 0; i < 3; ++i)
                    spec.weights[i] = parse_real(parts[i], "weight");
            }
            else if (key == "p" && spec.name != "ditree") {
                spec.density = parse_real(value, "p");
                if (spec.density < 0 || spec.density > 1)
                    throw FamilySpecError("p must lie in [0, 1]");
            }
            else
                throw FamilySpecError(spec.name + ": unknown key '" + key + "'");
        }
        if (! have_n || spec.params[0] < 1)
            throw FamilySpecError(spec.name + " needs n >= 1");
        if (! spec.seed)
            spec.seed = 0;
    }
    else
        throw FamilySpecError("unknown family '" + spec.name + "'");
    return spec;
}

auto digdom::to_string(const FamilySpec & spec) -> string
{
    if (spec.name == "cycle" || spec.name == "Gm" || spec.name == "path" || spec.name == "arcless" || spec.name == "Hm")
        return spec.name + ":" + std::to_string(spec.params.at(0));
    if (spec.name == "C4" || spec.name == "corona" || spec.name == "arcs")
        return spec.name + ":" + spec.variant;
    if (spec.name == "Tstar")
        return "Tstar:" + to_string(*spec.base);
    if (spec.name == "ditree")
        return "ditree:n=" + std::to_string(spec.params.at(0)) + ",seed=" + std::to_string(spec.seed.value_or(0)) +
            ",w=" + format_real(spec.weights[0]) + "/" + format_real(spec.weights[1]) + "/" + format_real(spec.weights[2]);
    if (spec.name == "digraph" || spec.name == "dag")
        return spec.name + ":n=" + std::to_string(spec.params.at(0)) + ",seed=" + std::to_string(spec.seed.value_or(0)) +
            ",p=" + format_real(spec.density);
    return spec.name;
}

auto digdom::make_family(const FamilySpec & spec) -> Digraph
{
    const auto & n = spec.name;
    if (n == "cycle")
        return gen_oriented_cycle(spec.params.at(0));
    if (n == "Gm")
        return gen_G_m(spec.params.at(0));
    if (n == "Hm")
        return gen_H_m(spec.params.at(0));
    if (n == "C4")
        return gen_C4_orientation(spec.variant);
    if (n == "path")
        return gen_bidirected_path(spec.params.at(0));
    if (n == "arcless")
        return gen_arcless(spec.params.at(0));
    if (n == "K1star")
        return gen_K1_star();
    if (n == "fig1G")
        return gen_fig1_G();
    if (n == "fig1H")
        return gen_fig1_H();
    if (n == "fig5D")
        return gen_fig5_D();
    if (n == "Tstar")
        return gen_T_star(make_family(*spec.base));
    if (n == "corona") {
        auto slash = spec.variant.find('/');
        auto edge_codes = spec.variant.substr(0, slash), leaf_codes = spec.variant.substr(slash + 1);
        vector<Edge> path;
        for (Vertex i = 0; i + 1 < leaf_codes.size(); ++i)
            path.emplace_back(i, i + 1);
        vector<EdgeOrientation> edges, leaves;
        for (char c : edge_codes)
            edges.push_back(orientation_from_char(c));
        for (char c : leaf_codes)
            leaves.push_back(orientation_from_char(c));
        return gen_corona_digraph(UndirectedGraph(leaf_codes.size(), path), edges, leaves);
    }
    if (n == "arcs") {
        auto [order, arcs] = parse_arc_spec(spec.variant);
        return Digraph(order, arcs);
    }
    if (n == "ditree")
        return random_ditree(spec.params.at(0), spec.seed.value_or(0), spec.weights);
    if (n == "digraph" || n == "dag") {
        Rng rng(spec.seed.value_or(0));
        return n == "digraph" ? random_digraph(spec.params.at(0), spec.density, rng)
                              : random_dag(spec.params.at(0), spec.density, rng);
    }
    throw FamilySpecError("unknown family '" + n + "'");
}

auto digdom::make_family(const string & text) -> Digraph
{
    return make_family(parse_family_spec(text));
}

auto digdom::gm_square_witness(size_t m) -> VertexSet
{
    ProductVertexMap map(2 * m + 1, 2 * m + 1);
    VertexSet s(map.order());
    for (size_t i = 1; i <= m; ++i) {
        s.set(map.flat(0, 2 * i - 1));
        s.set(map.flat(2 * i, 0));
        for (size_t j = 1; j <= m; ++j)
            s.set(map.flat(2 * i - 1, 2 * j));
    }
    return s;
}

auto digdom::hm_triangle_witness(size_t k) -> VertexSet
{
    const size_t m = 3 * k;
    ProductVertexMap map(4 * m, 3);
    VertexSet s(map.order());
    for (size_t i = 0; i < m; ++i)
        for (Vertex corner = 0; corner < 3; ++corner)
            s.set(map.flat(3 * i + corner, corner));
    return s;
}

auto digdom::k1_star_path_witness() -> VertexSet
{
    ProductVertexMap map(7, 4);
    const Vertex a = 0, c = 2, c2 = 4, a2 = 6;
    vector<std::pair<Vertex, Vertex>> pairs = {{a, 1}, {a, 2}, {c, 0}, {c, 3}, {c2, 1}, {c2, 2}, {a2, 0}, {a2, 3}};
    return product_set(map, pairs);
}

auto digdom::c4_partition_witness(const ProductVertexMap & map, const VertexSet & a, const VertexSet & b) -> VertexSet
{
    VertexSet s(map.order());
    for (auto x : a)
        s.set(map.flat(x, c4_u));
    for (auto x : b)
        s.set(map.flat(x, c4_v));
    return s;
}

auto digdom::fig1_witness() -> VertexSet
{
    ProductVertexMap map(3, 5);
    const Vertex a = 0, b = 1, c = 2;
    const Vertex u = 0, v = 1, x = 2, y = 3, z = 4;
    vector<std::pair<Vertex, Vertex>> pairs = {{c, u}, {a, v}, {c, x}, {a, y}, {b, z}};
    return product_set(map, pairs);
}
