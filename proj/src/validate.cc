#include <digdom/validate.hh>

#include <vector>

using namespace digdom;

using std::vector;

namespace
{
    auto members_of(const VertexSet & s) -> vector<Vertex>
    {
        vector<Vertex> result;
        for (Vertex v = 0; v < s.capacity(); ++v)
            if (s.test(v))
                result.push_back(v);
        return result;
    }
}

auto digdom::is_dominating_set(const Digraph & d, const VertexSet & s) -> bool
{
    if (s.capacity() != d.order())
        return false;
    auto members = members_of(s);
    for (Vertex x = 0; x < d.order(); ++x) {
        if (s.test(x))
            continue;
        bool dominated = false;
        for (auto v : members)
            if (d.has_arc(v, x))
                dominated = true;
        if (! dominated)
            return false;
    }
    return true;
}

auto digdom::is_total_dominating_set(const Digraph & d, const VertexSet & s) -> bool
{
    if (s.capacity() != d.order())
        return false;
    auto members = members_of(s);
    for (Vertex x = 0; x < d.order(); ++x) {
        bool dominated = false;
        for (auto v : members)
            if (d.has_arc(v, x))
                dominated = true;
        if (! dominated)
            return false;
    }
    return true;
}

auto digdom::is_packing(const Digraph & d, const VertexSet & p) -> bool
{
    if (p.capacity() != d.order())
        return false;
    auto members = members_of(p);
    for (auto x : members)
        for (auto y : members)
            if (x != y && d.has_arc(x, y))
                return false;
    for (Vertex v = 0; v < d.order(); ++v) {
        int hits = 0;
        for (auto x : members)
            if (d.has_arc(v, x))
                ++hits;
        if (hits >= 2)
            return false;
    }
    return true;
}

auto digdom::is_packing_by_in_neighbourhoods(const Digraph & d, const VertexSet & p) -> bool
{
    if (p.capacity() != d.order())
        return false;
    auto members = members_of(p);
    auto in_closed = [&](Vertex x) {
        vector<bool> result(d.order(), false);
        result[x] = true;
        for (Vertex v = 0; v < d.order(); ++v)
            if (d.has_arc(v, x))
                result[v] = true;
        return result;
    };
    for (size_t i = 0; i < members.size(); ++i) {
        auto a = in_closed(members[i]);
        for (size_t j = i + 1; j < members.size(); ++j) {
            auto b = in_closed(members[j]);
            for (Vertex v = 0; v < d.order(); ++v)
                if (a[v] && b[v])
                    return false;
        }
    }
    return true;
}

auto digdom::is_open_packing(const Digraph & d, const VertexSet & p) -> bool
{
    if (p.capacity() != d.order())
        return false;
    auto members = members_of(p);
    for (Vertex v = 0; v < d.order(); ++v) {
        int hits = 0;
        for (auto x : members)
            if (d.has_arc(v, x))
                ++hits;
        if (hits >= 2)
            return false;
    }
    return true;
}

auto digdom::is_undirected_dominating_set(const UndirectedGraph & g, const VertexSet & s) -> bool
{
    if (s.capacity() != g.order())
        return false;
    auto members = members_of(s);
    for (Vertex x = 0; x < g.order(); ++x) {
        if (s.test(x))
            continue;
        bool dominated = false;
        for (auto v : members)
            if (g.adjacent(v, x))
                dominated = true;
        if (! dominated)
            return false;
    }
    return true;
}

auto digdom::is_two_packing(const UndirectedGraph & g, const VertexSet & p) -> bool
{
    if (p.capacity() != g.order())
        return false;
    auto members = members_of(p);
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            auto x = members[i], y = members[j];
            if (g.adjacent(x, y))
                return false;
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.adjacent(v, x) && g.adjacent(v, y))
                    return false;
        }
    return true;
}

auto digdom::is_independent_set(const UndirectedGraph & g, const VertexSet & s) -> bool
{
    if (s.capacity() != g.order())
        return false;
    auto members = members_of(s);
    for (auto x : members)
        for (auto y : members)
            if (x != y && g.adjacent(x, y))
                return false;
    return true;
}

auto digdom::is_clique(const UndirectedGraph & g, const VertexSet & s) -> bool
{
    if (s.capacity() != g.order())
        return false;
    auto members = members_of(s);
    for (auto x : members)
        for (auto y : members)
            if (x != y && ! g.adjacent(x, y))
                return false;
    return true;
}
