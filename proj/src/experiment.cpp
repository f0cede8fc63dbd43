#include "randfa/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "randfa/errors.hpp"
#include "randfa/io.hpp"
#include "randfa/minimize.hpp"
#include "randfa/process.hpp"
#include "randfa/reach.hpp"

namespace randfa {

std::uint32_t small_spectrum_threshold(std::uint32_t n, double C) {
    double raw = std::ceil(C * std::log2(double(n)));
    return raw < 1.0 ? 1u : static_cast<std::uint32_t>(raw);
}

namespace {

TrialRecord run_one_trial(const ExperimentConfig& config, std::uint64_t index) {
    TrialRecord rec;
    rec.trial_index = index;
    rec.seed = split_seed(config.master_seed, index);
    rec.n = config.n;
    rec.k = config.k;

    Dfa dfa = sample_dfa(config.n, config.k, config.accept_prob, rec.seed);
    rec.r = accessibility_spectrum(dfa.base());
    MinimizationReport report = state_complexity(dfa);
    if (report.reachable_count != rec.r)
        throw contract_violation("trial: reachability and minimize disagree on R");
    rec.m = report.minimal_size;
    rec.excess = report.excess;

    if (config.observables.count(Observable::tau))
        rec.tau = run_chain(config.n, config.k, rec.seed).tau;
    if (config.observables.count(Observable::duds))
        rec.duds = static_cast<std::uint32_t>(dud_census(dfa.base()).count);
    if (config.observables.count(Observable::small_spectra)) {
        std::uint32_t threshold = small_spectrum_threshold(config.n, config.small_threshold_C);
        rec.small_spectra =
            static_cast<std::uint32_t>(spectrum_census(dfa.base(), threshold).small_states.size());
    }
    return rec;
}

}  // namespace

std::vector<TrialRecord> run_trials(const ExperimentConfig& config) {
    if (config.trials < 1 || config.n < 1 || config.k < 1)
        throw invalid_parameter("experiment: require trials >= 1, n >= 1, k >= 1");

    const std::uint64_t trials = config.trials;
    std::vector<TrialRecord> records(trials);

    unsigned workers = config.parallel ? config.parallel : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > trials) workers = static_cast<unsigned>(trials);

    if (workers == 1) {
        for (std::uint64_t i = 0; i < trials; ++i)
            records[i] = run_one_trial(config, i);
        return records;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= trials) return;
                try {
                    records[i] = run_one_trial(config, i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return records;  // indexed by trial, already in order
}

void write_trials(const ExperimentConfig& config, const std::vector<TrialRecord>& records) {
    auto emit = [&](std::ostream& out) {
        if (config.output_format == OutputFormat::csv)
            write_trials_csv(out, records);
        else
            write_trials_json(out, records);
    };
    if (config.output_path.empty()) {
        emit(std::cout);
    } else {
        std::ofstream out(config.output_path);
        if (!out)
            throw invalid_parameter("cannot open file for writing: " + config.output_path);
        emit(out);
    }
}

}  // namespace randfa
