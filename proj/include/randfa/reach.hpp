#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "randfa/automaton.hpp"

namespace randfa {

/// Result of a breadth-first search from one source state.
struct ReachResult {
    std::vector<State> visit_order;       ///< BFS order, symbols explored in increasing order
    std::vector<std::uint8_t> in_reach;   ///< membership flags, length n
    std::uint32_t count = 0;              ///< |reachable|
};

/// States reachable from `source` by any word; visit_order starts with
/// `source` itself (the empty word).
ReachResult reach_from(const Semiautomaton& m, State source);

/// The accessibility spectrum R: reachable-state count from state 0.
std::uint32_t accessibility_spectrum(const Semiautomaton& m);

/// Per-state spectra S(q) plus the census of states below `threshold`.
struct SpectrumCensus {
    std::vector<std::uint32_t> spectra;  ///< spectra[q] = S(q)
    std::uint32_t threshold = 0;
    std::vector<State> small_states;     ///< ascending; S(q) < threshold
};

SpectrumCensus spectrum_census(const Semiautomaton& m, std::uint32_t threshold);

/// Unordered state pairs whose transition rows agree on every symbol.
struct DudCensus {
    std::vector<std::pair<State, State>> duds;  ///< each pair (q, q') with q < q'
    std::size_t count = 0;
};

/// Hash-bucket enumeration of dud pairs; pairs listed lexicographically.
DudCensus dud_census(const Semiautomaton& m);

}  // namespace randfa
