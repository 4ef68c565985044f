#include <digdom/oracle.hh>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace digdom;

using std::optional;
using std::size_t;
using std::string;
using std::uint32_t;
using std::vector;

namespace
{
    struct Masks
    {
        vector<uint32_t> out, in;
    };

    auto masks_of(const Digraph & d) -> Masks
    {
        Masks m{vector<uint32_t>(d.order(), 0), vector<uint32_t>(d.order(), 0)};
        for (Vertex u = 0; u < d.order(); ++u)
            for (Vertex v = 0; v < d.order(); ++v)
                if (d.has_arc(u, v)) {
                    m.out[u] |= uint32_t{1} << v;
                    m.in[v] |= uint32_t{1} << u;
                }
        return m;
    }

    /// Calls f on every k-subset of n elements, in colex order, stopping when f returns true.
    template <typename F_>
    auto any_subset_of_size(size_t n, size_t k, const F_ & f) -> bool
    {
        if (k == 0)
            return f(uint32_t{0});
        if (k > n)
            return false;
        uint32_t s = (uint32_t{1} << k) - 1;
        const uint32_t limit = n == 32 ? 0 : (uint32_t{1} << n);
        while (s < limit) {
            if (f(s))
                return true;
            // Gosper's hack
            uint32_t c = s & -s, r = s + c;
            if (r == 0)
                break;
            s = (((r ^ s) >> 2) / c) | r;
        }
        return false;
    }

    auto dominates(const Masks & m, size_t n, uint32_t s, bool total) -> bool
    {
        for (size_t x = 0; x < n; ++x) {
            bool self = ! total && ((s >> x) & 1u);
            if (! self && (m.in[x] & s) == 0)
                return false;
        }
        return true;
    }

    auto packs(const Masks & m, size_t n, uint32_t s, bool open) -> bool
    {
        // the in-neighbourhoods of the members must be pairwise disjoint
        uint32_t seen = 0;
        for (size_t x = 0; x < n; ++x)
            if ((s >> x) & 1u) {
                uint32_t hood = m.in[x] | (open ? 0u : (uint32_t{1} << x));
                if (seen & hood)
                    return false;
                seen |= hood;
            }
        return true;
    }
}

auto digdom::to_string(Invariant i) -> string
{
    switch (i) {
    case Invariant::gamma: return "gamma";
    case Invariant::gamma_t: return "gamma_t";
    case Invariant::rho: return "rho";
    case Invariant::rho_open: return "rho_open";
    }
    return "unknown";
}

auto digdom::invariant_from_string(const string & s) -> Invariant
{
    for (auto i : {Invariant::gamma, Invariant::gamma_t, Invariant::rho, Invariant::rho_open})
        if (to_string(i) == s)
            return i;
    throw std::invalid_argument("unknown invariant '" + s + "'");
}

auto digdom::brute_force_invariant(const Digraph & d, Invariant which) -> optional<size_t>
{
    const size_t n = d.order();
    if (n > oracle_max_order)
        throw CapacityError("brute-force oracle handles at most " + std::to_string(oracle_max_order) + " vertices, got " +
            std::to_string(n));
    auto m = masks_of(d);

    switch (which) {
    case Invariant::gamma:
    case Invariant::gamma_t: {
        bool total = which == Invariant::gamma_t;
        for (size_t k = 0; k <= n; ++k)
            if (any_subset_of_size(n, k, [&](uint32_t s) { return dominates(m, n, s, total); }))
                return k;
        return std::nullopt;
    }
    case Invariant::rho:
    case Invariant::rho_open: {
        bool open = which == Invariant::rho_open;
        for (size_t k = n + 1; k-- > 0;)
            if (any_subset_of_size(n, k, [&](uint32_t s) { return packs(m, n, s, open); }))
                return k;
        return 0;
    }
    }
    return std::nullopt;
}
