#include "randfa/reach.hpp"

#include <algorithm>
#include <unordered_map>

#include "randfa/errors.hpp"

namespace randfa {

ReachResult reach_from(const Semiautomaton& m, State source) {
    const std::uint32_t n = m.num_states();
    const std::uint32_t k = m.alphabet_size();
    if (source >= n)
        throw invalid_state("reach_from: source out of range");

    ReachResult result;
    result.in_reach.assign(n, 0);
    result.visit_order.reserve(16);
    result.in_reach[source] = 1;
    result.visit_order.push_back(source);
    // visit_order doubles as the BFS queue
    for (std::size_t head = 0; head < result.visit_order.size(); ++head) {
        State q = result.visit_order[head];
        for (Symbol sigma = 0; sigma < k; ++sigma) {
            State target = m.step(q, sigma);
            if (!result.in_reach[target]) {
                result.in_reach[target] = 1;
                result.visit_order.push_back(target);
            }
        }
    }
    result.count = static_cast<std::uint32_t>(result.visit_order.size());
    return result;
}

std::uint32_t accessibility_spectrum(const Semiautomaton& m) {
    return reach_from(m, 0).count;
}

SpectrumCensus spectrum_census(const Semiautomaton& m, std::uint32_t threshold) {
    if (threshold < 1)
        throw invalid_parameter("spectrum_census: threshold must be >= 1");
    const std::uint32_t n = m.num_states();
    SpectrumCensus census;
    census.threshold = threshold;
    census.spectra.resize(n);
    for (State q = 0; q < n; ++q) {
        census.spectra[q] = reach_from(m, q).count;
        if (census.spectra[q] < threshold)
            census.small_states.push_back(q);
    }
    return census;
}

DudCensus dud_census(const Semiautomaton& m) {
    const std::uint32_t n = m.num_states();
    const std::uint32_t k = m.alphabet_size();
    const auto& table = m.table();

    std::unordered_map<std::uint64_t, std::vector<State>> buckets;
    buckets.reserve(n);
    for (State q = 0; q < n; ++q) {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the row
        for (Symbol sigma = 0; sigma < k; ++sigma) {
            h ^= table[std::size_t{q} * k + sigma];
            h *= 0x100000001b3ULL;
        }
        buckets[h].push_back(q);
    }

    auto rows_equal = [&](State a, State b) {
        return std::equal(table.begin() + std::size_t{a} * k,
                          table.begin() + std::size_t{a} * k + k,
                          table.begin() + std::size_t{b} * k);
    };

    DudCensus census;
    for (auto& [hash, bucket] : buckets) {
        if (bucket.size() < 2) continue;
        for (std::size_t i = 0; i < bucket.size(); ++i)
            for (std::size_t j = i + 1; j < bucket.size(); ++j)
                if (rows_equal(bucket[i], bucket[j]))
                    census.duds.emplace_back(bucket[i], bucket[j]);
    }
    std::sort(census.duds.begin(), census.duds.end());
    census.count = census.duds.size();
    return census;
}

}  // namespace randfa
