#include "randfa/process.hpp"

#include <cmath>

#include "randfa/errors.hpp"

namespace randfa {

ChainTrajectory run_chain(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (n == 0 || k == 0)
        throw invalid_parameter("run_chain: n and k must be >= 1");
    SplitMix64 rng = substream(seed, Stream::chain);

    ChainTrajectory traj{n, k, {}, {}, 0};
    std::uint32_t nu = 1;
    std::uint64_t t = 1;
    // omega_1 = k; omega can only reach 0 at t = k*nu + 1 <= k*n + 1
    std::uint64_t omega = k;
    traj.nu.push_back(nu);
    traj.omega.push_back(static_cast<std::uint32_t>(omega));
    while (omega > 0) {
        if (rng.uniform_below(n) >= nu && nu < n)
            ++nu;
        ++t;
        omega = std::uint64_t{k} * nu + 1 - t;
        traj.nu.push_back(nu);
        traj.omega.push_back(static_cast<std::uint32_t>(omega));
    }
    traj.tau = static_cast<std::uint32_t>(t);
    return traj;
}

std::vector<std::uint32_t> nu_path(std::uint32_t n, std::uint32_t horizon, SplitMix64& rng) {
    if (n == 0 || horizon == 0)
        throw invalid_parameter("nu_path: n and horizon must be >= 1");
    std::vector<std::uint32_t> nu(horizon);
    std::uint32_t v = 1;
    nu[0] = v;
    for (std::uint32_t t = 1; t < horizon; ++t) {
        if (rng.uniform_below(n) >= v && v < n)
            ++v;
        nu[t] = v;
    }
    return nu;
}

double expected_nu(std::uint32_t n, std::uint64_t t) {
    if (n == 0 || t < 1)
        throw invalid_parameter("expected_nu: require n >= 1 and t >= 1");
    // n(1 - (1-1/n)^t) without cancellation
    return -double(n) * std::expm1(double(t) * std::log1p(-1.0 / double(n)));
}

std::uint32_t balls_in_bins_occupied(std::uint32_t n, std::uint64_t t, std::uint64_t seed) {
    if (n == 0)
        throw invalid_parameter("balls_in_bins_occupied: n must be >= 1");
    SplitMix64 rng = substream(seed, Stream::bins);
    std::vector<std::uint8_t> occupied(n, 0);
    std::uint32_t count = 0;
    for (std::uint64_t i = 0; i < t; ++i) {
        std::uint32_t bin = rng.uniform_below(n);
        if (!occupied[bin]) {
            occupied[bin] = 1;
            ++count;
        }
    }
    return count;
}

double chernoff_bound(std::uint64_t t, double delta) {
    if (t < 1 || delta < 0.0)
        throw invalid_parameter("chernoff_bound: require t >= 1 and delta >= 0");
    return std::exp(-2.0 * delta * delta / double(t));
}

double lemma_F(double n, double t) {
    if (n < 1.0 || t < 0.0)
        throw invalid_parameter("lemma_F: require n >= 1 and t >= 0");
    if (n == 1.0)
        return (t == 0.0 ? 0.0 : 1.0) - (t - 1.0) / 2.0;
    return -n * std::expm1(t * std::log1p(-1.0 / n)) - (t - 1.0) / 2.0;
}

double lemma_H(double n, double t) {
    if (n < 1.0 || t < 0.0)
        throw invalid_parameter("lemma_H: require n >= 1 and t >= 0");
    return n - t / 2.0 - n * std::exp(-t / n);
}

}  // namespace randfa
