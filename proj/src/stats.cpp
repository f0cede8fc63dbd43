#include "randfa/stats.hpp"

#include <algorithm>
#include <cmath>

#include "randfa/errors.hpp"

namespace randfa {

const char* observable_name(Observable o) {
    switch (o) {
        case Observable::r: return "r";
        case Observable::m: return "m";
        case Observable::excess: return "excess";
        case Observable::tau: return "tau";
        case Observable::duds: return "duds";
        case Observable::small_spectra: return "small";
    }
    return "?";
}

std::optional<Observable> observable_from_name(const std::string& name) {
    if (name == "r") return Observable::r;
    if (name == "m") return Observable::m;
    if (name == "excess") return Observable::excess;
    if (name == "tau") return Observable::tau;
    if (name == "duds") return Observable::duds;
    if (name == "small" || name == "small_spectra") return Observable::small_spectra;
    return std::nullopt;
}

std::optional<double> observable_value(const TrialRecord& rec, Observable o) {
    switch (o) {
        case Observable::r: return double(rec.r);
        case Observable::m: return double(rec.m);
        case Observable::excess: return double(rec.excess);
        case Observable::tau:
            return rec.tau ? std::optional<double>(double(*rec.tau)) : std::nullopt;
        case Observable::duds:
            return rec.duds ? std::optional<double>(double(*rec.duds)) : std::nullopt;
        case Observable::small_spectra:
            return rec.small_spectra ? std::optional<double>(double(*rec.small_spectra))
                                     : std::nullopt;
    }
    return std::nullopt;
}

void RunningStats::add(double x) {
    if (count == 0) {
        min = max = x;
    } else {
        min = std::min(min, x);
        max = std::max(max, x);
    }
    ++count;
    double delta = x - mean;
    mean += delta / double(count);
    m2 += delta * (x - mean);
}

void RunningStats::merge(const RunningStats& other) {
    if (other.count == 0) return;
    if (count == 0) {
        *this = other;
        return;
    }
    double delta = other.mean - mean;
    std::size_t total = count + other.count;
    m2 += other.m2 + delta * delta * double(count) * double(other.count) / double(total);
    mean += delta * double(other.count) / double(total);
    min = std::min(min, other.min);
    max = std::max(max, other.max);
    count = total;
}

double RunningStats::variance() const {
    return count > 1 ? m2 / double(count - 1) : 0.0;
}

Summary summarize_values(std::vector<double> values, double center, double band) {
    if (values.empty())
        throw invalid_parameter("summarize: no records");
    if (!(band > 0.0))
        throw invalid_parameter("summarize: band must be positive");

    Summary s;
    s.trials = values.size();

    RunningStats running;
    std::size_t outside = 0;
    for (double x : values) {
        running.add(x);
        if (std::abs(x - center) > band) ++outside;
    }
    s.mean = running.mean;
    s.stddev = std::sqrt(running.variance());
    s.min = running.min;
    s.max = running.max;
    s.deviation_rate = double(outside) / double(s.trials);

    std::sort(values.begin(), values.end());
    auto nearest_rank = [&](double q) {
        std::size_t rank = static_cast<std::size_t>(std::ceil(q * double(values.size())));
        if (rank == 0) rank = 1;
        return values[rank - 1];
    };
    s.q01 = nearest_rank(0.01);
    s.q50 = nearest_rank(0.50);
    s.q99 = nearest_rank(0.99);
    return s;
}

Summary summarize(const std::vector<TrialRecord>& records, Observable o, double center,
                  double band) {
    std::vector<double> values;
    values.reserve(records.size());
    for (const auto& rec : records)
        if (auto v = observable_value(rec, o))
            values.push_back(*v);
    return summarize_values(std::move(values), center, band);
}

}  // namespace randfa
