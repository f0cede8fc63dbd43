#pragma once

#include <cstdint>
#include <vector>

#include "randfa/automaton.hpp"

namespace randfa {

/// Partition of the state set into equivalence classes. Class indices are
/// canonical: BFS order from the start state's class, symbols ascending.
struct StatePartition {
    std::vector<std::uint32_t> class_of;
    std::uint32_t num_classes = 0;

    bool operator==(const StatePartition&) const = default;
};

/// Full output of the two-stage minimization pipeline.
struct MinimizationReport {
    std::uint32_t reachable_count;  ///< R
    std::uint32_t minimal_size;     ///< ||M||
    std::uint32_t excess;           ///< E = R - ||M||
    StatePartition partition;       ///< over the reachable states
    Dfa minimal_dfa;                ///< canonical: BFS-renumbered quotient
};

/// REMOVE-UNREACHABLE: restrict to the states reachable from start,
/// renumbered in BFS visit order (start becomes 0). Language preserved.
Dfa remove_unreachable(const Dfa& d);

/// COLLAPSE-EQUIVALENT via Hopcroft partition refinement ("smaller half"
/// splitting, deterministic FIFO worklist). Input must be accessible.
MinimizationReport collapse_equivalent(const Dfa& d);

/// COLLAPSE-EQUIVALENT via Moore iterated signature refinement. Same
/// contract and same canonical output as collapse_equivalent.
MinimizationReport collapse_equivalent_moore(const Dfa& d);

/// remove_unreachable then collapse_equivalent (Hopcroft route).
MinimizationReport state_complexity(const Dfa& d);

/// remove_unreachable then collapse_equivalent_moore.
MinimizationReport state_complexity_moore(const Dfa& d);

/// Independent oracle: full pipeline with table-filling equivalence
/// (iterated marking to fixpoint). Refuses n above `oracle_bound`.
MinimizationReport minimize_bruteforce(const Dfa& d, std::uint32_t oracle_bound = 12);

/// Language equality by product-automaton reachability over pairs with
/// mismatched acceptance. Requires equal alphabets.
bool dfa_equivalent(const Dfa& a, const Dfa& b);

}  // namespace randfa
