#include "randfa/minimize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>
#include <utility>

#include "randfa/errors.hpp"
#include "randfa/reach.hpp"

namespace randfa {

namespace {

constexpr std::uint32_t kNone = 0xFFFFFFFFu;

/// Quotient an accessible DFA by `raw_class`, renumbering classes in BFS
/// order from the start class (symbols ascending). Shared by all three
/// minimization routes so their outputs are directly comparable.
MinimizationReport make_report(const Dfa& d, const std::vector<std::uint32_t>& raw_class,
                               std::uint32_t num_classes) {
    const std::uint32_t n = d.num_states();
    const std::uint32_t k = d.alphabet_size();

    std::vector<State> rep(num_classes, kNone);
    for (State q = 0; q < n; ++q)
        if (rep[raw_class[q]] == kNone)
            rep[raw_class[q]] = q;

    // BFS over the quotient graph; every class is reachable because d is
    // accessible and the partition respects transitions.
    std::vector<std::uint32_t> canon(num_classes, kNone);
    std::vector<std::uint32_t> order;
    order.reserve(num_classes);
    canon[raw_class[d.start()]] = 0;
    order.push_back(raw_class[d.start()]);
    for (std::size_t head = 0; head < order.size(); ++head) {
        State r = rep[order[head]];
        for (Symbol sigma = 0; sigma < k; ++sigma) {
            std::uint32_t target = raw_class[d.step(r, sigma)];
            if (canon[target] == kNone) {
                canon[target] = static_cast<std::uint32_t>(order.size());
                order.push_back(target);
            }
        }
    }

    std::vector<State> table(std::size_t{num_classes} * k);
    std::vector<std::uint8_t> accepting(num_classes);
    for (std::uint32_t idx = 0; idx < num_classes; ++idx) {
        State r = rep[order[idx]];
        for (Symbol sigma = 0; sigma < k; ++sigma)
            table[std::size_t{idx} * k + sigma] = canon[raw_class[d.step(r, sigma)]];
        accepting[idx] = d.is_accepting(r) ? 1 : 0;
    }

    StatePartition partition;
    partition.num_classes = num_classes;
    partition.class_of.resize(n);
    for (State q = 0; q < n; ++q)
        partition.class_of[q] = canon[raw_class[q]];

    return MinimizationReport{
        n, num_classes, n - num_classes, std::move(partition),
        Dfa(Semiautomaton(num_classes, k, std::move(table)), 0, std::move(accepting))};
}

void require_accessible(const Dfa& d, const char* who) {
    if (reach_from(d.base(), d.start()).count != d.num_states())
        throw contract_violation(std::string(who) + ": input must be accessible");
}

/// Initial acceptance partition with class ids in first-appearance order;
/// an empty side is dropped. Returns the class count (1 or 2).
std::uint32_t acceptance_partition(const Dfa& d, std::vector<std::uint32_t>& cls) {
    const std::uint32_t n = d.num_states();
    cls.assign(n, 0);
    bool first_flag = d.is_accepting(0);
    std::uint32_t num = 1;
    for (State q = 1; q < n; ++q) {
        if (d.is_accepting(q) != first_flag) {
            cls[q] = 1;
            num = 2;
        }
    }
    return num;
}

}  // namespace

Dfa remove_unreachable(const Dfa& d) {
    ReachResult reach = reach_from(d.base(), d.start());
    const std::uint32_t n = d.num_states();
    const std::uint32_t k = d.alphabet_size();
    const std::uint32_t r = reach.count;

    std::vector<std::uint32_t> new_id(n, kNone);
    for (std::uint32_t i = 0; i < r; ++i)
        new_id[reach.visit_order[i]] = i;

    std::vector<State> table(std::size_t{r} * k);
    std::vector<std::uint8_t> accepting(r);
    for (std::uint32_t i = 0; i < r; ++i) {
        State q = reach.visit_order[i];
        for (Symbol sigma = 0; sigma < k; ++sigma)
            table[std::size_t{i} * k + sigma] = new_id[d.step(q, sigma)];
        accepting[i] = d.is_accepting(q) ? 1 : 0;
    }
    return Dfa(Semiautomaton(r, k, std::move(table)), 0, std::move(accepting));
}

MinimizationReport collapse_equivalent(const Dfa& d) {
    require_accessible(d, "collapse_equivalent");
    const std::uint32_t n = d.num_states();
    const std::uint32_t k = d.alphabet_size();

    std::vector<std::uint32_t> cls;
    std::uint32_t num_classes = acceptance_partition(d, cls);
    if (num_classes == 1 || n == 1)
        return make_report(d, cls, 1);

    // inverse transitions, CSR per symbol; symbol sigma owns preds[sigma*n, (sigma+1)*n)
    std::vector<std::uint32_t> offset(std::size_t{k} * (n + 1), 0);
    for (State q = 0; q < n; ++q)
        for (Symbol sigma = 0; sigma < k; ++sigma)
            ++offset[std::size_t{sigma} * (n + 1) + d.step(q, sigma) + 1];
    for (Symbol sigma = 0; sigma < k; ++sigma) {
        offset[std::size_t{sigma} * (n + 1)] = sigma * n;
        for (std::uint32_t t = 0; t < n; ++t)
            offset[std::size_t{sigma} * (n + 1) + t + 1] +=
                offset[std::size_t{sigma} * (n + 1) + t];
    }
    std::vector<State> preds(std::size_t{n} * k);
    {
        std::vector<std::uint32_t> fill(offset);
        for (State q = 0; q < n; ++q)
            for (Symbol sigma = 0; sigma < k; ++sigma)
                preds[fill[std::size_t{sigma} * (n + 1) + d.step(q, sigma)]++] = q;
    }

    // refinable partition: elems grouped by class, loc = index into elems
    std::vector<State> elems(n);
    std::vector<std::uint32_t> loc(n);
    std::vector<std::uint32_t> first, past;
    first.reserve(n);
    past.reserve(n);
    {
        std::vector<std::uint32_t> counts(num_classes, 0);
        for (State q = 0; q < n; ++q) ++counts[cls[q]];
        std::uint32_t at = 0;
        for (std::uint32_t c = 0; c < num_classes; ++c) {
            first.push_back(at);
            at += counts[c];
            past.push_back(at);
        }
        std::vector<std::uint32_t> fill(first);
        for (State q = 0; q < n; ++q) {
            loc[q] = fill[cls[q]];
            elems[fill[cls[q]]++] = q;
        }
    }

    std::deque<std::pair<std::uint32_t, Symbol>> work;
    std::vector<std::uint8_t> in_work(std::size_t{n} * k, 0);
    for (std::uint32_t c = 0; c < num_classes; ++c)
        for (Symbol sigma = 0; sigma < k; ++sigma) {
            work.emplace_back(c, sigma);
            in_work[std::size_t{c} * k + sigma] = 1;
        }

    std::vector<std::uint32_t> marked(n, 0);
    std::vector<std::uint32_t> touched;
    std::vector<State> splitter;

    while (!work.empty()) {
        auto [c, sigma] = work.front();
        work.pop_front();
        in_work[std::size_t{c} * k + sigma] = 0;

        // snapshot: marking may reorder c's own segment
        splitter.assign(elems.begin() + first[c], elems.begin() + past[c]);
        touched.clear();
        for (State target : splitter) {
            const std::uint32_t lo = offset[std::size_t{sigma} * (n + 1) + target];
            const std::uint32_t hi = offset[std::size_t{sigma} * (n + 1) + target + 1];
            for (std::uint32_t i = lo; i < hi; ++i) {
                State p = preds[i];
                std::uint32_t b = cls[p];
                std::uint32_t dest = first[b] + marked[b];
                if (loc[p] >= dest) {  // not yet marked
                    if (marked[b] == 0) touched.push_back(b);
                    State other = elems[dest];
                    elems[dest] = p;
                    elems[loc[p]] = other;
                    loc[other] = loc[p];
                    loc[p] = dest;
                    ++marked[b];
                }
            }
        }

        for (std::uint32_t b : touched) {
            std::uint32_t mc = marked[b];
            marked[b] = 0;
            if (mc == past[b] - first[b]) continue;  // whole class marked, no split

            // new class takes the marked front segment; b keeps the rest
            std::uint32_t fresh = static_cast<std::uint32_t>(first.size());
            first.push_back(first[b]);
            past.push_back(first[b] + mc);
            first[b] += mc;
            for (std::uint32_t i = first[fresh]; i < past[fresh]; ++i)
                cls[elems[i]] = fresh;

            std::uint32_t size_b = past[b] - first[b];
            for (Symbol s = 0; s < k; ++s) {
                if (in_work[std::size_t{b} * k + s]) {
                    work.emplace_back(fresh, s);
                    in_work[std::size_t{fresh} * k + s] = 1;
                } else {
                    std::uint32_t smaller = (mc <= size_b) ? fresh : b;
                    work.emplace_back(smaller, s);
                    in_work[std::size_t{smaller} * k + s] = 1;
                }
            }
        }
    }

    return make_report(d, cls, static_cast<std::uint32_t>(first.size()));
}

MinimizationReport collapse_equivalent_moore(const Dfa& d) {
    require_accessible(d, "collapse_equivalent_moore");
    const std::uint32_t n = d.num_states();
    const std::uint32_t k = d.alphabet_size();

    std::vector<std::uint32_t> cls;
    std::uint32_t num = acceptance_partition(d, cls);

    std::vector<std::uint32_t> signature(k + 1);
    std::vector<std::uint32_t> next(n);
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::uint32_t fresh = 0;
        for (State q = 0; q < n; ++q) {
            signature[0] = cls[q];
            for (Symbol sigma = 0; sigma < k; ++sigma)
                signature[sigma + 1] = cls[d.step(q, sigma)];
            auto [it, inserted] = ids.emplace(signature, fresh);
            if (inserted) ++fresh;
            next[q] = it->second;
        }
        if (fresh == num) break;
        cls = next;
        num = fresh;
    }
    return make_report(d, cls, num);
}

MinimizationReport state_complexity(const Dfa& d) {
    return collapse_equivalent(remove_unreachable(d));
}

MinimizationReport state_complexity_moore(const Dfa& d) {
    return collapse_equivalent_moore(remove_unreachable(d));
}

MinimizationReport minimize_bruteforce(const Dfa& d, std::uint32_t oracle_bound) {
    if (d.num_states() > oracle_bound)
        throw oracle_bound_exceeded("minimize_bruteforce: instance exceeds oracle bound");
    Dfa acc = remove_unreachable(d);
    const std::uint32_t n = acc.num_states();
    const std::uint32_t k = acc.alphabet_size();

    // table filling: mark distinguishable pairs until fixpoint
    std::vector<std::uint8_t> dist(std::size_t{n} * n, 0);
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q)
            if (acc.is_accepting(p) != acc.is_accepting(q))
                dist[std::size_t{p} * n + q] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p) {
            for (State q = p + 1; q < n; ++q) {
                if (dist[std::size_t{p} * n + q]) continue;
                for (Symbol sigma = 0; sigma < k; ++sigma) {
                    State a = acc.step(p, sigma);
                    State b = acc.step(q, sigma);
                    if (a > b) std::swap(a, b);
                    if (a != b && dist[std::size_t{a} * n + b]) {
                        dist[std::size_t{p} * n + q] = 1;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    std::vector<std::uint32_t> cls(n, kNone);
    std::uint32_t num = 0;
    for (State q = 0; q < n; ++q) {
        for (State p = 0; p < q; ++p) {
            if (!dist[std::size_t{p} * n + q]) {
                cls[q] = cls[p];
                break;
            }
        }
        if (cls[q] == kNone) cls[q] = num++;
    }
    return make_report(acc, cls, num);
}

bool dfa_equivalent(const Dfa& a, const Dfa& b) {
    if (a.alphabet_size() != b.alphabet_size())
        throw invalid_parameter("dfa_equivalent: alphabet sizes differ");
    const std::uint32_t k = a.alphabet_size();
    const std::uint64_t nb = b.num_states();

    std::unordered_set<std::uint64_t> visited;
    std::vector<std::pair<State, State>> queue;
    auto push = [&](State p, State q) {
        if (visited.insert(std::uint64_t{p} * nb + q).second)
            queue.emplace_back(p, q);
    };
    push(a.start(), b.start());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [p, q] = queue[head];
        if (a.is_accepting(p) != b.is_accepting(q)) return false;
        for (Symbol sigma = 0; sigma < k; ++sigma)
            push(a.step(p, sigma), b.step(q, sigma));
    }
    return true;
}

}  // namespace randfa
