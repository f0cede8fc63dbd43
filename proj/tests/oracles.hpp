// Test-only oracles, independent of the library's implementation paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "randfa/automaton.hpp"

namespace oracles {

/// The 4-state, 2-symbol fixture used throughout:
/// rows 0:(1,2) 1:(1,3) 2:(1,3) 3:(3,3), accepting {3}.
inline randfa::Dfa d_star() {
    return randfa::Dfa(randfa::Semiautomaton(4, 2, {1, 2, 1, 3, 1, 3, 3, 3}), 0,
                       {0, 0, 0, 1});
}

/// Naive fold, written independently of delta_star.
inline randfa::State naive_fold(const randfa::Semiautomaton& m, randfa::State q,
                                const randfa::Word& w) {
    for (auto sigma : w) q = m.table()[std::size_t{q} * m.alphabet_size() + sigma];
    return q;
}

/// Reachable set by worklist DFS over a std::set.
inline std::set<randfa::State> naive_reachable(const randfa::Semiautomaton& m,
                                               randfa::State source) {
    std::set<randfa::State> seen{source};
    std::vector<randfa::State> stack{source};
    while (!stack.empty()) {
        randfa::State q = stack.back();
        stack.pop_back();
        for (randfa::Symbol s = 0; s < m.alphabet_size(); ++s) {
            randfa::State t = m.step(q, s);
            if (seen.insert(t).second) stack.push_back(t);
        }
    }
    return seen;
}

/// Dud pairs by direct O(n^2) row comparison.
inline std::vector<std::pair<randfa::State, randfa::State>> naive_duds(
    const randfa::Semiautomaton& m) {
    const auto n = m.num_states();
    const auto k = m.alphabet_size();
    std::vector<std::pair<randfa::State, randfa::State>> result;
    for (randfa::State p = 0; p < n; ++p)
        for (randfa::State q = p + 1; q < n; ++q) {
            bool same = true;
            for (randfa::Symbol s = 0; s < k && same; ++s)
                same = m.step(p, s) == m.step(q, s);
            if (same) result.emplace_back(p, q);
        }
    return result;
}

/// Exact law of nu_t (no stopping rule) by dynamic programming.
/// Returns probabilities indexed by nu in [0, n].
inline std::vector<double> exact_nu_law(std::uint32_t n, std::uint32_t t) {
    std::vector<double> p(n + 1, 0.0);
    p[1] = 1.0;  // nu_1 = 1
    for (std::uint32_t step = 1; step < t; ++step) {
        std::vector<double> q(n + 1, 0.0);
        for (std::uint32_t v = 1; v <= n; ++v) {
            if (p[v] == 0.0) continue;
            double stay = double(v) / double(n);
            q[v] += p[v] * stay;
            if (v < n) q[v + 1] += p[v] * (1.0 - stay);
        }
        p = std::move(q);
    }
    return p;
}

/// Exact law of nu_tau by dynamic programming over (t, nu) with the
/// open-edge stopping rule omega_t = k*nu + 1 - t.
inline std::vector<double> exact_nu_tau_law(std::uint32_t n, std::uint32_t k) {
    std::vector<double> result(n + 1, 0.0);
    // active[v] = probability of being at nu = v and not yet stopped
    std::vector<double> active(n + 1, 0.0);
    active[1] = 1.0;
    const std::uint64_t t_max = std::uint64_t{k} * n + 1;
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        // absorb trajectories with omega_t = 0, i.e. nu = (t-1)/k
        if ((t - 1) % k == 0) {
            std::uint64_t v = (t - 1) / k;
            if (v >= 1 && v <= n && active[v] > 0.0) {
                result[v] += active[v];
                active[v] = 0.0;
            }
        }
        std::vector<double> next(n + 1, 0.0);
        for (std::uint32_t v = 1; v <= n; ++v) {
            if (active[v] == 0.0) continue;
            double stay = double(v) / double(n);
            next[v] += active[v] * stay;
            if (v < n) next[v + 1] += active[v] * (1.0 - stay);
        }
        active = std::move(next);
    }
    return result;
}

/// Exact law of the occupied-bin count after t throws into n bins, by
/// full enumeration of the n^t outcomes (small n, t only).
inline std::vector<double> exact_balls_law(std::uint32_t n, std::uint32_t t) {
    std::vector<double> law(n + 1, 0.0);
    std::vector<std::uint32_t> throws(t, 0);
    double weight = std::pow(double(n), -double(t));
    for (;;) {
        std::set<std::uint32_t> bins(throws.begin(), throws.end());
        law[bins.size()] += weight;
        std::size_t i = 0;
        while (i < t && ++throws[i] == n) throws[i++] = 0;
        if (i == t) break;
    }
    if (t == 0) {
        law.assign(n + 1, 0.0);
        law[0] = 1.0;
    }
    return law;
}

inline double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
    double tv = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
    return tv / 2.0;
}

/// Bisection for the positive root of x = 1 - e^(-kx) on [0.5, 1].
inline double bisect_alpha(int k, double tol = 1e-14) {
    double lo = 0.5, hi = 1.0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double f = mid - 1.0 + std::exp(-double(k) * mid);
        (f > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracles
