#pragma once

#include <cstdint>
#include <vector>

#include "randfa/rng.hpp"

namespace randfa {

/// One realization of the exploration chain, recorded up to the stopping
/// time tau (first t with omega_t = 0). nu and omega both have tau entries;
/// omega_t = k*nu_t + 1 - t throughout and nu_tau = (tau - 1)/k.
struct ChainTrajectory {
    std::uint32_t n;
    std::uint32_t k;
    std::vector<std::uint32_t> nu;
    std::vector<std::uint32_t> omega;
    std::uint32_t tau;
};

/// Simulate the chain nu_1 = 1, nu_{t+1} = nu_t with probability nu_t/n
/// else nu_t + 1, until the open-edge count omega hits zero. nu_tau is
/// distributed as the accessibility spectrum of a uniform random
/// k-ary semiautomaton on n states.
ChainTrajectory run_chain(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// nu_t for t = 1..horizon from one chain realization (no stopping rule);
/// the chain itself, independent of the open-edge embedding.
std::vector<std::uint32_t> nu_path(std::uint32_t n, std::uint32_t horizon, SplitMix64& rng);

/// E[nu_t] = n(1 - (1 - 1/n)^t).
double expected_nu(std::uint32_t n, std::uint64_t t);

/// Throw t balls into n bins uniformly; return the occupied-bin count,
/// which is distributed as nu_t.
std::uint32_t balls_in_bins_occupied(std::uint32_t n, std::uint64_t t, std::uint64_t seed);

/// Lower-tail bound exp(-2 delta^2 / t) for nu_t - E[nu_t] <= -delta.
double chernoff_bound(std::uint64_t t, double delta);

/// F(t) = n(1 - (1 - 1/n)^t) - (t - 1)/2, evaluated for t >= 0 via
/// exp(t*log1p(-1/n)) to keep ~1e-10 relative accuracy at n = 1e6.
double lemma_F(double n, double t);

/// H(t) = n - t/2 - n exp(-t/n); concave, zero at t = 0 and t = 2*alpha_2*n,
/// maximal at t = n log 2.
double lemma_H(double n, double t);

}  // namespace randfa
