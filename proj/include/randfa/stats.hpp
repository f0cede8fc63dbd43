#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace randfa {

/// One Monte Carlo sample of the per-automaton observables.
struct TrialRecord {
    std::uint64_t trial_index = 0;
    std::uint64_t seed = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t r = 0;       ///< accessibility spectrum
    std::uint32_t m = 0;       ///< state complexity ||M||
    std::uint32_t excess = 0;  ///< E = r - m
    std::optional<std::uint32_t> tau;
    std::optional<std::uint32_t> duds;
    std::optional<std::uint32_t> small_spectra;
};

enum class Observable { r, m, excess, tau, duds, small_spectra };

const char* observable_name(Observable o);
std::optional<Observable> observable_from_name(const std::string& name);

/// Extract one observable; empty when the optional field was not recorded.
std::optional<double> observable_value(const TrialRecord& rec, Observable o);

/// Order statistics plus deviation census for one observable.
/// deviation_rate is the fraction of trials with |value - center| > band.
struct Summary {
    std::size_t trials = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
    double q01 = 0.0;  ///< nearest-rank quantiles
    double q50 = 0.0;
    double q99 = 0.0;
    double deviation_rate = 0.0;
};

/// Deterministic, permutation-invariant aggregation: exact sort for
/// quantiles, Welford single-pass mean/variance.
Summary summarize_values(std::vector<double> values, double center, double band);

Summary summarize(const std::vector<TrialRecord>& records, Observable o, double center,
                  double band);

/// Mergeable moment accumulator (count/mean/M2/min/max); quantiles are
/// computed only at the final aggregation.
struct RunningStats {
    std::size_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double min = 0.0;
    double max = 0.0;

    void add(double x);
    void merge(const RunningStats& other);
    double variance() const;
};

}  // namespace randfa
