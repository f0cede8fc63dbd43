#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "randfa/minimize.hpp"
#include "randfa/reach.hpp"
#include "randfa/rng.hpp"
#include "randfa/sample.hpp"

using namespace randfa;

namespace {

Dfa self_loop_start(std::uint32_t n) {
    // state 0 loops to itself on both symbols; other states point anywhere
    std::vector<State> table(std::size_t{n} * 2);
    for (State q = 1; q < n; ++q) {
        table[q * 2] = (q + 1) % n;
        table[q * 2 + 1] = 0;
    }
    std::vector<std::uint8_t> accepting(n, 0);
    accepting[n - 1] = 1;
    return Dfa(Semiautomaton(n, 2, std::move(table)), 0, std::move(accepting));
}

/// Relabel the states of d by a permutation (start moves too); language
/// is unchanged.
Dfa permuted(const Dfa& d, SplitMix64& rng) {
    const std::uint32_t n = d.num_states();
    const std::uint32_t k = d.alphabet_size();
    std::vector<State> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint32_t i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.uniform_below(i + 1)]);
    std::vector<State> table(std::size_t{n} * k);
    std::vector<std::uint8_t> accepting(n);
    for (State q = 0; q < n; ++q) {
        for (Symbol s = 0; s < k; ++s)
            table[std::size_t{perm[q]} * k + s] = perm[d.step(q, s)];
        accepting[perm[q]] = d.is_accepting(q) ? 1 : 0;
    }
    return Dfa(Semiautomaton(n, k, std::move(table)), perm[d.start()], std::move(accepting));
}

}  // namespace

TEST_CASE("remove_unreachable") {
    auto loop = self_loop_start(5);
    CHECK(remove_unreachable(loop).num_states() == 1);

    // D* plus an isolated extra state 4
    Dfa extended(Semiautomaton(5, 2, {1, 2, 1, 3, 1, 3, 3, 3, 4, 4}), 0, {0, 0, 0, 1, 1});
    Dfa trimmed = remove_unreachable(extended);
    CHECK(trimmed.num_states() == 4);
    CHECK(trimmed == remove_unreachable(oracles::d_star()));

    // already accessible: identity up to BFS renumbering, here exact
    CHECK(remove_unreachable(oracles::d_star()) == oracles::d_star());
}

TEST_CASE("collapse_equivalent rejects non-accessible input") {
    auto loop = self_loop_start(5);
    CHECK_THROWS_AS(collapse_equivalent(loop), contract_violation);
    CHECK_THROWS_AS(collapse_equivalent_moore(loop), contract_violation);
}

TEST_CASE("collapse_equivalent: all-accepting automaton collapses to one state") {
    Dfa d(Semiautomaton(3, 2, {1, 2, 2, 0, 0, 1}), 0, {1, 1, 1});
    for (auto* fn : {&collapse_equivalent, &collapse_equivalent_moore}) {
        auto report = (*fn)(d);
        CHECK(report.minimal_size == 1);
        CHECK(report.excess == 2);
    }
    CHECK(minimize_bruteforce(d).minimal_size == 1);
}

TEST_CASE("the D* fixture minimizes to 3 states") {
    auto d = oracles::d_star();
    for (auto report : {state_complexity(d), state_complexity_moore(d), minimize_bruteforce(d)}) {
        CHECK(report.reachable_count == 4);
        CHECK(report.minimal_size == 3);
        CHECK(report.excess == 1);
        CHECK(report.partition.num_classes == 3);
        CHECK(report.partition.class_of[1] == report.partition.class_of[2]);
        CHECK(report.partition.class_of[0] != report.partition.class_of[1]);
        CHECK(report.partition.class_of[3] != report.partition.class_of[1]);
    }
}

TEST_CASE("n=1 and self-loop start minimize to 1 state") {
    Dfa one(Semiautomaton(1, 2, {0, 0}), 0, {1});
    CHECK(state_complexity(one).minimal_size == 1);
    auto report = state_complexity(self_loop_start(8));
    CHECK(report.reachable_count == 1);
    CHECK(report.minimal_size == 1);
    CHECK(report.excess == 0);
}

TEST_CASE("oracle triangle on random small instances") {
    SplitMix64 rng(4242);
    for (int iter = 0; iter < 2000; ++iter) {
        std::uint32_t n = 1 + rng.uniform_below(8);
        std::uint32_t k = 1 + rng.uniform_below(3);
        Dfa d = sample_dfa(n, k, AcceptProb(0.5), rng.next());
        auto hopcroft = state_complexity(d);
        auto moore = state_complexity_moore(d);
        auto brute = minimize_bruteforce(d);
        CHECK(hopcroft.reachable_count == brute.reachable_count);
        CHECK(hopcroft.minimal_size == brute.minimal_size);
        CHECK(hopcroft.excess == brute.excess);
        CHECK(hopcroft.partition == brute.partition);
        CHECK(moore.minimal_size == brute.minimal_size);
        CHECK(moore.partition == brute.partition);
        CHECK(hopcroft.minimal_dfa == brute.minimal_dfa);
        CHECK(moore.minimal_dfa == brute.minimal_dfa);
    }
}

TEST_CASE("language preservation and idempotence") {
    SplitMix64 rng(555);
    for (int iter = 0; iter < 300; ++iter) {
        std::uint32_t n = 1 + rng.uniform_below(12);
        Dfa d = sample_dfa(n, 2, AcceptProb(0.5), rng.next());
        auto report = state_complexity(d);
        CHECK(dfa_equivalent(d, report.minimal_dfa));
        auto again = state_complexity(report.minimal_dfa);
        CHECK(again.minimal_size == report.minimal_size);
        CHECK(again.excess == 0);
        CHECK(again.minimal_dfa == report.minimal_dfa);
    }
}

TEST_CASE("canonical form: same language, identical minimal DFA") {
    SplitMix64 rng(808);
    for (int iter = 0; iter < 200; ++iter) {
        std::uint32_t n = 2 + rng.uniform_below(10);
        Dfa d = sample_dfa(n, 2, AcceptProb(0.5), rng.next());
        Dfa shuffled = permuted(d, rng);
        CHECK(state_complexity(d).minimal_dfa == state_complexity(shuffled).minimal_dfa);
    }
}

TEST_CASE("minimal DFA has no equivalent pair and is accessible") {
    SplitMix64 rng(606);
    for (int iter = 0; iter < 100; ++iter) {
        std::uint32_t n = 1 + rng.uniform_below(10);
        Dfa minimal = state_complexity(sample_dfa(n, 2, AcceptProb(0.5), rng.next())).minimal_dfa;
        CHECK(reach_from(minimal.base(), minimal.start()).count == minimal.num_states());
        auto again = minimize_bruteforce(minimal);
        CHECK(again.minimal_size == minimal.num_states());
    }
}

TEST_CASE("dfa_equivalent") {
    auto d = oracles::d_star();
    CHECK(dfa_equivalent(d, d));

    Dfa flipped(d.base(), 0, {1, 0, 0, 0});  // A = {0} instead of {3}
    CHECK_FALSE(dfa_equivalent(d, flipped));

    Dfa one(Semiautomaton(1, 1, {0}), 0, {0});
    CHECK_THROWS_AS(dfa_equivalent(d, one), invalid_parameter);
}

TEST_CASE("brute-force oracle refuses large instances") {
    Dfa big = sample_dfa(13, 2, AcceptProb(0.5), 9);
    CHECK_THROWS_AS(minimize_bruteforce(big), oracle_bound_exceeded);
    CHECK(minimize_bruteforce(big, 13).minimal_size >= 1);
}
