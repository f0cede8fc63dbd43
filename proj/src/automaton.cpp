#include "randfa/automaton.hpp"

namespace randfa {

Semiautomaton::Semiautomaton(std::uint32_t n, std::uint32_t k, std::vector<State> table)
    : n_(n), k_(k), table_(std::move(table)) {
    if (n == 0 || k == 0)
        throw invalid_parameter("semiautomaton requires n >= 1 and k >= 1");
    if (table_.size() != std::size_t{n} * k)
        throw invalid_parameter("transition table must have exactly n*k entries");
    for (State target : table_)
        if (target >= n)
            throw invalid_state("transition target out of range");
}

Dfa::Dfa(Semiautomaton base, State start, std::vector<std::uint8_t> accepting)
    : base_(std::move(base)), start_(start), accepting_(std::move(accepting)) {
    if (start_ >= base_.num_states())
        throw invalid_state("start state out of range");
    if (accepting_.size() != base_.num_states())
        throw invalid_parameter("accepting flags must have exactly n entries");
}

State delta_star(const Semiautomaton& m, State q, const Word& w) {
    if (q >= m.num_states())
        throw invalid_state("delta_star: state out of range");
    for (Symbol sigma : w) {
        if (sigma >= m.alphabet_size())
            throw invalid_word("delta_star: symbol out of range");
        q = m.step(q, sigma);
    }
    return q;
}

bool distinguishes(const Dfa& d, State p, State q, const Word& w) {
    return d.is_accepting(delta_star(d.base(), p, w)) !=
           d.is_accepting(delta_star(d.base(), q, w));
}

}  // namespace randfa
