#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "randfa/sample.hpp"
#include "randfa/stats.hpp"

namespace randfa {

enum class OutputFormat { csv, json };

struct ExperimentConfig {
    std::uint32_t n = 100;
    std::uint32_t k = 2;
    std::uint64_t trials = 100;
    std::uint64_t master_seed = 0;
    AcceptProb accept_prob{};
    std::set<Observable> observables{Observable::r, Observable::m, Observable::excess};
    double small_threshold_C = 4.0;
    OutputFormat output_format = OutputFormat::csv;
    std::string output_path;   ///< empty means stdout
    unsigned parallel = 0;     ///< 0 means hardware_concurrency
};

/// Smallness cutoff used by the experiment harness: ceil(C * log2 n),
/// at least 1.
std::uint32_t small_spectrum_threshold(std::uint32_t n, double C);

/// Run all trials. Trial i uses seed split_seed(master_seed, i); records
/// come back sorted by trial_index regardless of the parallelism level,
/// so output is byte-identical across thread counts.
std::vector<TrialRecord> run_trials(const ExperimentConfig& config);

/// Write records to config.output_path (or stdout) in the configured format.
void write_trials(const ExperimentConfig& config, const std::vector<TrialRecord>& records);

}  // namespace randfa
