#ifndef DIGDOM_ORACLE_HH
#define DIGDOM_ORACLE_HH

#include <digdom/digraph.hh>

#include <optional>
#include <string>

namespace digdom
{
    enum class Invariant
    {
        gamma,
        gamma_t,
        rho,
        rho_open
    };

    auto to_string(Invariant i) -> std::string;
    auto invariant_from_string(const std::string & s) -> Invariant;

    inline constexpr std::size_t oracle_max_order = 24;

    /**
     * Subset enumeration straight from the definitions, sharing nothing with
     * the solvers. Minimisation invariants scan subsets by increasing size,
     * maximisation ones by decreasing size. Returns nullopt for γ_t when no
     * total dominating set exists. Throws CapacityError above oracle_max_order.
     */
    auto brute_force_invariant(const Digraph & d, Invariant which) -> std::optional<std::size_t>;
}

#endif
