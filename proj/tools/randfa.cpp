// randfa: random-DFA laboratory command line.
//
// Subcommands: gen, minimize, reach, alpha, chain, experiment, duds.
// Exit codes: 0 success, 2 invalid parameters, 3 parse error,
// 4 no positive root.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "randfa/alpha.hpp"
#include "randfa/errors.hpp"
#include "randfa/experiment.hpp"
#include "randfa/io.hpp"
#include "randfa/minimize.hpp"
#include "randfa/process.hpp"
#include "randfa/reach.hpp"
#include "randfa/sample.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_master_seed() {
    if (const char* env = std::getenv("RANDFA_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw randfa::invalid_parameter("RANDFA_SEED is not a valid unsigned integer");
        }
    }
    return 0;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw randfa::invalid_parameter("cannot open file for writing: " + path);
    out << text;
}

json summary_json(const randfa::Summary& s) {
    return json{{"trials", s.trials}, {"mean", s.mean},     {"stddev", s.stddev},
                {"min", s.min},       {"max", s.max},       {"q01", s.q01},
                {"q50", s.q50},       {"q99", s.q99},       {"deviation_rate", s.deviation_rate}};
}

int run(int argc, char** argv) {
    CLI::App app{"random-DFA laboratory"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "sample a uniform random DFA and write it");
    std::uint32_t gen_n = 10, gen_k = 2;
    double gen_p = 0.5;
    std::uint64_t gen_seed = default_master_seed();
    std::string gen_out;
    gen->add_option("--n", gen_n, "state count")->required();
    gen->add_option("--k", gen_k, "alphabet size")->required();
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("--accept-prob", gen_p, "accepting probability");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // minimize
    auto* minimize = app.add_subcommand("minimize", "minimize a DFA file, print report JSON");
    std::string min_in;
    bool emit_dfa = false;
    minimize->add_option("file", min_in, "input DFA file")->required();
    minimize->add_flag("--emit-dfa", emit_dfa, "include the canonical minimal DFA");

    // reach
    auto* reach = app.add_subcommand("reach", "accessibility spectrum of a DFA file");
    std::string reach_in;
    reach->add_option("file", reach_in, "input DFA file")->required();

    // duds
    auto* duds = app.add_subcommand("duds", "dud census of a DFA file");
    std::string duds_in;
    duds->add_option("file", duds_in, "input DFA file")->required();

    // alpha
    auto* alpha = app.add_subcommand("alpha", "compute alpha_k");
    int alpha_k = 2;
    alpha->add_option("--k", alpha_k, "alphabet size")->required();

    // chain
    auto* chain = app.add_subcommand("chain", "exploration chain statistics");
    std::uint32_t chain_n = 100, chain_k = 2;
    std::uint64_t chain_trials = 1, chain_seed = default_master_seed();
    chain->add_option("--n", chain_n, "state count")->required();
    chain->add_option("--k", chain_k, "alphabet size")->required();
    chain->add_option("--trials", chain_trials, "number of chain runs");
    chain->add_option("--seed", chain_seed, "master seed");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo trial suite");
    randfa::ExperimentConfig config;
    config.master_seed = default_master_seed();
    double exp_p = 0.5;
    std::string exp_format = "csv";
    std::string exp_observables = "r,m,excess";
    experiment->add_option("--n", config.n, "state count")->required();
    experiment->add_option("--k", config.k, "alphabet size")->required();
    experiment->add_option("--trials", config.trials, "trial count")->required();
    experiment->add_option("--seed", config.master_seed, "master seed");
    experiment->add_option("--accept-prob", exp_p, "accepting probability");
    experiment->add_option("--format", exp_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    experiment->add_option("--out", config.output_path, "trial file path (default stdout)");
    experiment->add_option("--small-c", config.small_threshold_C,
                           "smallness constant C (threshold C*log2 n)");
    experiment->add_option("--parallel", config.parallel, "worker threads (default: cores)");
    experiment->add_option("--observables", exp_observables,
                           "comma list from r,m,excess,tau,duds,small");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*gen) {
        randfa::Dfa d = randfa::sample_dfa(gen_n, gen_k, randfa::AcceptProb(gen_p), gen_seed);
        write_text(gen_out, randfa::dfa_to_string(d));
        return 0;
    }

    if (*minimize) {
        randfa::Dfa d = randfa::read_dfa_file(min_in);
        randfa::MinimizationReport report = randfa::state_complexity(d);
        json out{{"n", d.num_states()},
                 {"k", d.alphabet_size()},
                 {"r", report.reachable_count},
                 {"m", report.minimal_size},
                 {"excess", report.excess}};
        if (emit_dfa) out["minimal_dfa"] = randfa::dfa_to_string(report.minimal_dfa);
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    if (*reach) {
        randfa::Dfa d = randfa::read_dfa_file(reach_in);
        randfa::ReachResult result = randfa::reach_from(d.base(), d.start());
        json out{{"n", d.num_states()}, {"k", d.alphabet_size()}, {"r", result.count}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    if (*duds) {
        randfa::Dfa d = randfa::read_dfa_file(duds_in);
        randfa::DudCensus census = randfa::dud_census(d.base());
        json pairs = json::array();
        for (auto [p, q] : census.duds) pairs.push_back(json::array({p, q}));
        json out{{"n", d.num_states()}, {"count", census.count}, {"pairs", pairs}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    if (*alpha) {
        randfa::AlphaResult result = randfa::solve_alpha(alpha_k);
        double cross = randfa::lambert_w_check(alpha_k);
        json out{{"k", result.k},
                 {"alpha", result.alpha},
                 {"residual", result.residual},
                 {"lambert_w", cross}};
        std::cout << std::setprecision(17) << out.dump(2) << '\n';
        return 0;
    }

    if (*chain) {
        if (chain_trials < 1)
            throw randfa::invalid_parameter("chain: trials must be >= 1");
        randfa::RunningStats tau_stats, nu_stats;
        for (std::uint64_t i = 0; i < chain_trials; ++i) {
            auto traj =
                randfa::run_chain(chain_n, chain_k, randfa::split_seed(chain_seed, i));
            tau_stats.add(double(traj.tau));
            nu_stats.add(double(traj.nu.back()));
        }
        json out{{"n", chain_n},
                 {"k", chain_k},
                 {"trials", chain_trials},
                 {"tau", {{"mean", tau_stats.mean}, {"min", tau_stats.min}, {"max", tau_stats.max}}},
                 {"nu_tau",
                  {{"mean", nu_stats.mean}, {"min", nu_stats.min}, {"max", nu_stats.max}}}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    if (*experiment) {
        config.accept_prob = randfa::AcceptProb(exp_p);
        config.output_format =
            exp_format == "json" ? randfa::OutputFormat::json : randfa::OutputFormat::csv;
        config.observables.clear();
        std::istringstream names(exp_observables);
        std::string name;
        while (std::getline(names, name, ',')) {
            auto obs = randfa::observable_from_name(name);
            if (!obs)
                throw randfa::invalid_parameter("unknown observable: " + name);
            config.observables.insert(*obs);
        }
        config.observables.insert(
            {randfa::Observable::r, randfa::Observable::m, randfa::Observable::excess});

        std::vector<randfa::TrialRecord> records = randfa::run_trials(config);
        write_trials(config, records);

        const double band = std::sqrt(double(config.n)) * std::log(double(config.n));
        json summaries;
        if (config.k >= 2) {
            const double alpha_center = randfa::solve_alpha(int(config.k)).alpha * config.n;
            summaries["center"] = alpha_center;
            summaries["band"] = band;
            for (auto obs : config.observables) {
                double center = alpha_center;
                if (obs == randfa::Observable::excess || obs == randfa::Observable::duds ||
                    obs == randfa::Observable::small_spectra)
                    center = 0.0;
                summaries[randfa::observable_name(obs)] =
                    summary_json(randfa::summarize(records, obs, center, band));
            }
        } else {
            // Remark-1 regime: no alpha_1; center each observable at its
            // empirical mean and say so.
            summaries["notice"] =
                "k = 1: no positive root; summaries centered at empirical means";
            for (auto obs : config.observables) {
                auto pre = randfa::summarize(records, obs, 0.0, band);
                summaries[randfa::observable_name(obs)] =
                    summary_json(randfa::summarize(records, obs, pre.mean, band));
            }
        }
        // summary goes to stdout unless the records themselves are on stdout
        (config.output_path.empty() ? std::cerr : std::cout) << summaries.dump(2) << '\n';
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const randfa::no_positive_root& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const randfa::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
