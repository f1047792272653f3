#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flowforge/model.hpp"

namespace flowforge {

// Cohort behavior description for the synthetic generator. Cases walk a
// first-order Markov chain over sections: each step resamples the
// section from the (normalized) weights with a probability calibrated
// so the expected number of section changes per case equals jump_rate,
// and otherwise stays. The stationary section distribution is exactly
// the normalized weights.
struct BehaviorProfile {
    std::vector<std::string> sections;
    std::vector<double> weights;             // positive; normalized internally
    std::vector<double> start_distribution;  // sums to 1; defaults to weights
    double jump_rate = 5.0;                  // expected section changes per case
    std::size_t case_count = 100;
    double events_per_case_mean = 100.0;     // Poisson, clamped to >= 1

    // Fills defaults (uniform weights, start = weights) and checks
    // invariants; throws std::invalid_argument.
    void finalize();
};

// key = value lines, '#' comments; lists are comma-separated. Keys:
// sections, weights, start, jump_rate, cases, events_per_case.
BehaviorProfile load_behavior_profile(const std::string& path);

// Deterministic for a fixed seed regardless of evaluation order: every
// case derives its own generator state from (seed, group, case index).
// Group A cases are named a00001..., group B b00001.... Timestamps are
// synthetic, strictly increasing within a trace. The logs are
// section-level.
std::pair<EventLog, EventLog> generate_cohort_pair(const BehaviorProfile& profile_a,
                                                   const BehaviorProfile& profile_b,
                                                   std::uint64_t seed);

// Same walk rendered as raw clickstream rows for one synthetic course,
// with a score table that puts group A in [80,95] and group B in
// [55,70] so a median split recovers the cohorts.
struct SyntheticClickstream {
    std::vector<RawEvent> events;
    std::vector<ScoreRecord> scores;
};

SyntheticClickstream generate_clickstream_pair(const BehaviorProfile& profile_a,
                                               const BehaviorProfile& profile_b,
                                               std::uint64_t seed);

}  // namespace flowforge
