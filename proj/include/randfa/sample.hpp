#pragma once

#include <cstdint>

#include "randfa/automaton.hpp"
#include "randfa/errors.hpp"
#include "randfa/rng.hpp"

namespace randfa {

/// Acceptance probability for random DFAs; must lie strictly in (0, 1).
struct AcceptProb {
    double p = 0.5;

    AcceptProb() = default;
    explicit AcceptProb(double prob) : p(prob) {
        if (!(p > 0.0 && p < 1.0))
            throw invalid_parameter("accept probability must lie in (0, 1)");
    }
};

/// Uniform sample from [n]^([n]x[k]): each transition target independently
/// uniform on [0, n). Deterministic in the seed.
Semiautomaton sample_semiautomaton(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// Uniform transitions as above plus independent Bernoulli(p) accepting
/// flags; start state fixed to 0. The transition part is bit-identical to
/// sample_semiautomaton(n, k, seed).
Dfa sample_dfa(std::uint32_t n, std::uint32_t k, AcceptProb p, std::uint64_t seed);

}  // namespace randfa
