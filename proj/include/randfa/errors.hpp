#pragma once

#include <stdexcept>
#include <string>

namespace randfa {

struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_state : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct invalid_word : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an input file does not conform to the DFA interchange format.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

/// x = 1 - e^(-kx) has no positive root for k <= 1.
struct no_positive_root : std::domain_error {
    using std::domain_error::domain_error;
};

/// Brute-force minimizer refuses instances above its configured bound.
struct oracle_bound_exceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A checked precondition between modules was violated (e.g. non-accessible
/// input to collapse_equivalent).
struct contract_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace randfa
