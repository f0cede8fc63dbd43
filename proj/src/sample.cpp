#include "randfa/sample.hpp"

namespace randfa {

Semiautomaton sample_semiautomaton(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (n == 0 || k == 0)
        throw invalid_parameter("sample_semiautomaton: n and k must be >= 1");
    SplitMix64 rng = substream(seed, Stream::transitions);
    std::vector<State> table(std::size_t{n} * k);
    for (auto& target : table)
        target = rng.uniform_below(n);
    return Semiautomaton(n, k, std::move(table));
}

Dfa sample_dfa(std::uint32_t n, std::uint32_t k, AcceptProb p, std::uint64_t seed) {
    Semiautomaton base = sample_semiautomaton(n, k, seed);
    SplitMix64 rng = substream(seed, Stream::accepting);
    std::vector<std::uint8_t> accepting(n);
    for (auto& flag : accepting)
        flag = rng.bernoulli(p.p) ? 1 : 0;
    return Dfa(std::move(base), 0, std::move(accepting));
}

}  // namespace randfa
