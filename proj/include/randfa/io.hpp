#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "randfa/automaton.hpp"
#include "randfa/stats.hpp"

namespace randfa {

/// DFA interchange format (text, newline-delimited, ASCII):
///   line 1: "dfa 1"
///   line 2: "n k"
///   line 3: "start S"
///   line 4: "accepting" + n space-separated 0/1 flags
///   lines 5..4+n: row q = delta(q,0) .. delta(q,k-1)
void write_dfa(std::ostream& out, const Dfa& d);
std::string dfa_to_string(const Dfa& d);

/// Throws parse_error (with line number) on malformed input.
Dfa read_dfa(std::istream& in);
Dfa read_dfa_file(const std::string& path);
void write_dfa_file(const std::string& path, const Dfa& d);

/// Trial CSV: header "trial,seed,n,k,r,m,excess,tau,duds,small";
/// absent observables are left empty.
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);

/// JSON alternative mirroring the CSV fields (array of objects; absent
/// observables are omitted).
void write_trials_json(std::ostream& out, const std::vector<TrialRecord>& records);

}  // namespace randfa
