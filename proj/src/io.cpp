#include "randfa/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "randfa/errors.hpp"

namespace randfa {

void write_dfa(std::ostream& out, const Dfa& d) {
    const std::uint32_t n = d.num_states();
    const std::uint32_t k = d.alphabet_size();
    out << "dfa 1\n" << n << ' ' << k << "\nstart " << d.start() << "\naccepting";
    for (State q = 0; q < n; ++q)
        out << ' ' << (d.is_accepting(q) ? 1 : 0);
    out << '\n';
    for (State q = 0; q < n; ++q) {
        for (Symbol sigma = 0; sigma < k; ++sigma)
            out << (sigma ? " " : "") << d.step(q, sigma);
        out << '\n';
    }
}

std::string dfa_to_string(const Dfa& d) {
    std::ostringstream out;
    write_dfa(out, d);
    return out.str();
}

namespace {

std::string next_line(std::istream& in, int& line_no) {
    std::string line;
    if (!std::getline(in, line))
        throw parse_error("unexpected end of file", line_no + 1);
    ++line_no;
    return line;
}

}  // namespace

Dfa read_dfa(std::istream& in) {
    int line_no = 0;

    std::string line = next_line(in, line_no);
    if (line != "dfa 1")
        throw parse_error("expected header \"dfa 1\"", line_no);

    line = next_line(in, line_no);
    std::istringstream dims(line);
    long long n = 0, k = 0;
    std::string extra;
    if (!(dims >> n >> k) || (dims >> extra) || n < 1 || k < 1)
        throw parse_error("expected \"n k\" with n, k >= 1", line_no);

    line = next_line(in, line_no);
    std::istringstream start_line(line);
    std::string keyword;
    long long start = -1;
    if (!(start_line >> keyword >> start) || keyword != "start" || (start_line >> extra) ||
        start < 0 || start >= n)
        throw parse_error("expected \"start S\" with 0 <= S < n", line_no);

    line = next_line(in, line_no);
    std::istringstream acc_line(line);
    if (!(acc_line >> keyword) || keyword != "accepting")
        throw parse_error("expected \"accepting\" line", line_no);
    std::vector<std::uint8_t> accepting(static_cast<std::size_t>(n));
    for (auto& flag : accepting) {
        long long v = -1;
        if (!(acc_line >> v) || (v != 0 && v != 1))
            throw parse_error("expected n space-separated 0/1 flags", line_no);
        flag = static_cast<std::uint8_t>(v);
    }
    if (acc_line >> extra)
        throw parse_error("trailing tokens after accepting flags", line_no);

    std::vector<State> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (long long q = 0; q < n; ++q) {
        line = next_line(in, line_no);
        std::istringstream row(line);
        for (long long sigma = 0; sigma < k; ++sigma) {
            long long target = -1;
            if (!(row >> target) || target < 0 || target >= n)
                throw parse_error("expected k targets in [0, n)", line_no);
            table[static_cast<std::size_t>(q * k + sigma)] = static_cast<State>(target);
        }
        if (row >> extra)
            throw parse_error("trailing tokens after transition row", line_no);
    }

    return Dfa(Semiautomaton(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                             std::move(table)),
               static_cast<State>(start), std::move(accepting));
}

Dfa read_dfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_parameter("cannot open file: " + path);
    return read_dfa(in);
}

void write_dfa_file(const std::string& path, const Dfa& d) {
    std::ofstream out(path);
    if (!out)
        throw invalid_parameter("cannot open file for writing: " + path);
    write_dfa(out, d);
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "trial,seed,n,k,r,m,excess,tau,duds,small\n";
    for (const auto& rec : records) {
        out << rec.trial_index << ',' << rec.seed << ',' << rec.n << ',' << rec.k << ','
            << rec.r << ',' << rec.m << ',' << rec.excess << ',';
        if (rec.tau) out << *rec.tau;
        out << ',';
        if (rec.duds) out << *rec.duds;
        out << ',';
        if (rec.small_spectra) out << *rec.small_spectra;
        out << '\n';
    }
}

void write_trials_json(std::ostream& out, const std::vector<TrialRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) {
        nlohmann::json obj{
            {"trial", rec.trial_index}, {"seed", rec.seed}, {"n", rec.n}, {"k", rec.k},
            {"r", rec.r},               {"m", rec.m},       {"excess", rec.excess},
        };
        if (rec.tau) obj["tau"] = *rec.tau;
        if (rec.duds) obj["duds"] = *rec.duds;
        if (rec.small_spectra) obj["small"] = *rec.small_spectra;
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace randfa
