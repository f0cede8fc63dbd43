#pragma once

#include <cstdint>

namespace randfa {

/// SplitMix64 finalizer; a bijection on uint64.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based 64-bit generator. Integer-only, identical output on every
/// platform. Statistical quality per Steele/Lea/Flood (the splitmix64 stream).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Unbiased uniform draw on [0, n) by bitmask rejection; no modulo bias.
    std::uint32_t uniform_below(std::uint32_t n) {
        if (n == 1) return 0;
        const std::uint32_t mask = mask_for(n);
        for (;;) {
            // one 64-bit draw yields up to two candidates before refill
            std::uint64_t r = next();
            std::uint32_t lo = static_cast<std::uint32_t>(r) & mask;
            if (lo < n) return lo;
            std::uint32_t hi = static_cast<std::uint32_t>(r >> 32) & mask;
            if (hi < n) return hi;
        }
    }

    /// Bernoulli(p) via 64-bit threshold compare; p in (0,1).
    bool bernoulli(double p) {
        double scaled = p * 18446744073709551616.0;  // p * 2^64
        std::uint64_t threshold =
            scaled >= 18446744073709551616.0 ? ~0ULL : static_cast<std::uint64_t>(scaled);
        return next() < threshold;
    }

private:
    static std::uint32_t mask_for(std::uint32_t n) {
        std::uint32_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        return mask;
    }

    std::uint64_t state_;
};

/// Seed stream tags; transition and acceptance draws come from disjoint
/// substreams so the semiautomaton part of sample_dfa(seed) is identical
/// to sample_semiautomaton(seed).
enum class Stream : std::uint64_t {
    transitions = 0x7472616e73ULL,
    accepting = 0x616363657074ULL,
    chain = 0x636861696eULL,
    bins = 0x62696e73ULL,
};

inline SplitMix64 substream(std::uint64_t seed, Stream tag) {
    return SplitMix64(mix64(seed ^ mix64(static_cast<std::uint64_t>(tag))));
}

/// Deterministic per-trial seed: injective in `index` for a fixed master seed.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace randfa
