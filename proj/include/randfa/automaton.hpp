#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "randfa/errors.hpp"

namespace randfa {

using State = std::uint32_t;
using Symbol = std::uint32_t;

/// A word over the alphabet [k); the empty vector is epsilon.
using Word = std::vector<Symbol>;

/// Complete transition structure on n states over a k-symbol alphabet:
/// a directed multigraph with regular outdegree k. Immutable after
/// construction; safe to share across threads.
class Semiautomaton {
public:
    /// `table` is row-major: entry q*k + sigma is delta(q, sigma).
    Semiautomaton(std::uint32_t n, std::uint32_t k, std::vector<State> table);

    std::uint32_t num_states() const { return n_; }
    std::uint32_t alphabet_size() const { return k_; }

    /// delta(q, sigma); bounds are the caller's responsibility on the hot path.
    State step(State q, Symbol sigma) const { return table_[std::size_t{q} * k_ + sigma]; }

    const std::vector<State>& table() const { return table_; }

    bool operator==(const Semiautomaton& other) const = default;

private:
    std::uint32_t n_;
    std::uint32_t k_;
    std::vector<State> table_;
};

/// Deterministic finite automaton: semiautomaton plus start state and
/// accepting set (membership flags, one per state).
class Dfa {
public:
    Dfa(Semiautomaton base, State start, std::vector<std::uint8_t> accepting);

    const Semiautomaton& base() const { return base_; }
    std::uint32_t num_states() const { return base_.num_states(); }
    std::uint32_t alphabet_size() const { return base_.alphabet_size(); }
    State start() const { return start_; }
    bool is_accepting(State q) const { return accepting_[q] != 0; }
    const std::vector<std::uint8_t>& accepting() const { return accepting_; }
    State step(State q, Symbol sigma) const { return base_.step(q, sigma); }

    bool operator==(const Dfa& other) const = default;

private:
    Semiautomaton base_;
    State start_;
    std::vector<std::uint8_t> accepting_;
};

/// Extended transition function: left fold of `step` over `w` starting at q.
/// delta_star(m, q, epsilon) == q.
State delta_star(const Semiautomaton& m, State q, const Word& w);

/// True iff w maps p and q to states with different acceptance status.
bool distinguishes(const Dfa& d, State p, State q, const Word& w);

}  // namespace randfa
