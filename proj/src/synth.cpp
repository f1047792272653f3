#include "flowforge/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string_view>

#include "flowforge/errors.hpp"
#include "flowforge/parallel.hpp"

namespace flowforge {
namespace {

// splitmix64 finalizer; also used to derive per-case seeds.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** — fixed algorithm so that seeded output never shifts
// across platforms or standard libraries.
class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

std::size_t sample_index(Xoshiro256ss& rng, const std::vector<double>& cumulative) {
    double u = rng.uniform();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) return cumulative.size() - 1;
    return static_cast<std::size_t>(it - cumulative.begin());
}

// Knuth's product-of-uniforms method; fine for the supported means.
std::size_t sample_poisson(Xoshiro256ss& rng, double lambda) {
    const double limit = std::exp(-lambda);
    double product = 1.0;
    std::size_t k = 0;
    do {
        ++k;
        product *= rng.uniform();
    } while (product > limit);
    return k - 1;
}

std::vector<double> cumulative_of(const std::vector<double>& weights) {
    std::vector<double> out(weights.size());
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    double running = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        running += weights[i] / total;
        out[i] = running;
    }
    out.back() = 1.0;
    return out;
}

struct Walker {
    const BehaviorProfile& profile;
    std::vector<double> weight_cdf;
    std::vector<double> start_cdf;
    double resample_prob;

    explicit Walker(const BehaviorProfile& p)
        : profile(p), weight_cdf(cumulative_of(p.weights)), start_cdf(cumulative_of(p.start_distribution)) {
        double total = std::accumulate(p.weights.begin(), p.weights.end(), 0.0);
        double sum_sq = 0.0;
        for (double w : p.weights) sum_sq += (w / total) * (w / total);
        double steps = p.events_per_case_mean - 1.0;
        if (p.jump_rate == 0.0) {
            resample_prob = 0.0;
        } else {
            if (steps <= 0.0 || sum_sq >= 1.0) {
                throw std::invalid_argument(
                    "jump rate unreachable: needs >1 event per case and >1 section");
            }
            resample_prob = p.jump_rate / (steps * (1.0 - sum_sq));
            if (resample_prob > 1.0) {
                throw std::invalid_argument("jump rate too high for the event volume");
            }
        }
    }

    // Section index sequence for one case.
    std::vector<std::size_t> walk(Xoshiro256ss& rng) const {
        std::size_t events = std::max<std::size_t>(1, sample_poisson(rng, profile.events_per_case_mean));
        std::vector<std::size_t> path;
        path.reserve(events);
        std::size_t current = sample_index(rng, start_cdf);
        path.push_back(current);
        for (std::size_t i = 1; i < events; ++i) {
            if (rng.uniform() < resample_prob) current = sample_index(rng, weight_cdf);
            path.push_back(current);
        }
        return path;
    }
};

std::uint64_t case_seed(std::uint64_t seed, std::uint32_t group, std::uint64_t index) {
    return mix64(mix64(mix64(seed) ^ (0x1000 + group)) ^ index);
}

std::string case_name(char prefix, std::size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%c%05zu", prefix, index + 1);
    return buf;
}

// Case k in group g starts 2022-09-01 08:00 +0200, staggered an hour
// per case (groups interleave half an hour apart); events tick 61 s.
Timestamp case_start(std::uint32_t group, std::size_t index) {
    static const Timestamp base = Timestamp::parse_log("2022-09-01 08:00:00.000 +0200");
    Timestamp t = base;
    t.epoch_ms += static_cast<std::int64_t>(index) * 3'600'000 + group * 1'800'000;
    return t;
}

EventLog generate_cohort(const BehaviorProfile& profile, std::uint64_t seed, std::uint32_t group,
                         char prefix) {
    Walker walker(profile);
    // Per-case walks are independent (own seed), so they can run on any
    // number of threads without changing the result.
    std::vector<std::vector<std::size_t>> paths(profile.case_count);
    parallel_for(profile.case_count, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            Xoshiro256ss rng(case_seed(seed, group, k));
            paths[k] = walker.walk(rng);
        }
    });

    std::vector<LogRow> rows;
    rows.reserve(profile.case_count * static_cast<std::size_t>(profile.events_per_case_mean));
    std::uint64_t row = 0;
    for (std::size_t k = 0; k < profile.case_count; ++k) {
        CaseId id{CaseScope::PerCourse, case_name(prefix, k)};
        Timestamp when = case_start(group, k);
        for (std::size_t section : paths[k]) {
            rows.push_back(LogRow{id, when, profile.sections[section], row++});
            when.epoch_ms += 61'000;
        }
    }
    return make_event_log(Aggregation::Section, std::move(rows));
}

}  // namespace

void BehaviorProfile::finalize() {
    if (sections.empty()) throw std::invalid_argument("profile needs at least one section");
    if (weights.empty()) weights.assign(sections.size(), 1.0);
    if (weights.size() != sections.size()) {
        throw std::invalid_argument("weights and sections differ in length");
    }
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
    }
    if (start_distribution.empty()) {
        double total = std::accumulate(weights.begin(), weights.end(), 0.0);
        start_distribution.reserve(weights.size());
        for (double w : weights) start_distribution.push_back(w / total);
    }
    if (start_distribution.size() != sections.size()) {
        throw std::invalid_argument("start distribution and sections differ in length");
    }
    double sum = 0.0;
    for (double p : start_distribution) {
        if (!(p >= 0.0)) throw std::invalid_argument("start probabilities must be >= 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("start distribution must sum to 1");
    }
    if (!(jump_rate >= 0.0)) throw std::invalid_argument("jump rate must be >= 0");
    if (case_count < 1) throw std::invalid_argument("case count must be >= 1");
    if (!(events_per_case_mean >= 1.0 && events_per_case_mean <= 500.0)) {
        throw std::invalid_argument("events per case mean must lie in [1, 500]");
    }
}

BehaviorProfile load_behavior_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open profile '" + path + "'");

    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
            s.remove_suffix(1);
        }
        return s;
    };
    auto split_list = [&](std::string_view s) {
        std::vector<std::string> parts;
        while (true) {
            std::size_t comma = s.find(',');
            parts.emplace_back(trim(s.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            s.remove_prefix(comma + 1);
        }
        return parts;
    };
    auto parse_number = [&](const std::string& value, std::size_t line) {
        try {
            std::size_t used = 0;
            double v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            return v;
        } catch (const std::exception&) {
            throw InputError(path + ":" + std::to_string(line) + ": not a number: '" + value + "'");
        }
    };

    BehaviorProfile profile;
    profile.jump_rate = 5.0;
    profile.case_count = 100;
    profile.events_per_case_mean = 100.0;

    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view s = trim(raw);
        if (s.empty() || s.front() == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string_view::npos) {
            throw InputError(path + ":" + std::to_string(line) + ": expected key = value");
        }
        std::string key(trim(s.substr(0, eq)));
        std::string value(trim(s.substr(eq + 1)));
        if (key == "sections") {
            profile.sections = split_list(value);
        } else if (key == "weights") {
            profile.weights.clear();
            for (const std::string& part : split_list(value)) {
                profile.weights.push_back(parse_number(part, line));
            }
        } else if (key == "start") {
            profile.start_distribution.clear();
            for (const std::string& part : split_list(value)) {
                profile.start_distribution.push_back(parse_number(part, line));
            }
        } else if (key == "jump_rate") {
            profile.jump_rate = parse_number(value, line);
        } else if (key == "cases") {
            double v = parse_number(value, line);
            if (v < 1 || v != std::floor(v)) {
                throw InputError(path + ":" + std::to_string(line) + ": cases must be a positive integer");
            }
            profile.case_count = static_cast<std::size_t>(v);
        } else if (key == "events_per_case") {
            profile.events_per_case_mean = parse_number(value, line);
        } else {
            throw InputError(path + ":" + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    try {
        profile.finalize();
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
    return profile;
}

std::pair<EventLog, EventLog> generate_cohort_pair(const BehaviorProfile& profile_a,
                                                   const BehaviorProfile& profile_b,
                                                   std::uint64_t seed) {
    BehaviorProfile a = profile_a;
    BehaviorProfile b = profile_b;
    a.finalize();
    b.finalize();
    return {generate_cohort(a, seed, 0, 'a'), generate_cohort(b, seed, 1, 'b')};
}

SyntheticClickstream generate_clickstream_pair(const BehaviorProfile& profile_a,
                                               const BehaviorProfile& profile_b,
                                               std::uint64_t seed) {
    auto [log_a, log_b] = generate_cohort_pair(profile_a, profile_b, seed);
    SyntheticClickstream out;
    out.events.reserve(log_a.event_count() + log_b.event_count());

    std::uint64_t row = 0;
    auto render = [&](const EventLog& log, double score_base) {
        for (const Trace& trace : log.traces) {
            const std::string& user = trace.case_id.value;
            for (const TraceEvent& event : trace.events) {
                RawEvent raw;
                raw.timestamp = event.timestamp;
                raw.course_name = "Synthetic Course";
                raw.course_id = "SYN-1";
                raw.event_name = "view " + event.activity;
                raw.section = event.activity;
                raw.user_id = user;
                raw.row = row++;
                out.events.push_back(std::move(raw));
            }
            // Deterministic spread inside the group's score band.
            double jitter = static_cast<double>(mix64(seed ^ mix64(row)) % 1501) / 100.0;
            out.scores.push_back(ScoreRecord{"SYN-1", user, score_base + jitter});
        }
    };
    render(log_a, 80.0);
    render(log_b, 55.0);
    return out;
}

}  // namespace flowforge
