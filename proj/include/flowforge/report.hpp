#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flowforge/model.hpp"

namespace flowforge {

// Number of adjacent event pairs whose section labels differ. Equals
// the collapsed (self-loop-free) trace length minus one.
std::size_t section_change_count(const Trace& trace);

struct SectionChangeSummary {
    std::vector<std::size_t> per_case_a;
    std::vector<std::size_t> per_case_b;
    double median_a = 0.0;
    double median_b = 0.0;
    double mean_a = 0.0;
    double mean_b = 0.0;
    double ratio = 0.0;  // median_a / median_b
};

// Per-group medians of per-case section changes. Throws
// EmptyResultError when a group has no cases.
SectionChangeSummary group_section_change_summary(const EventLog& group_a,
                                                  const EventLog& group_b);

// Rows A/B, columns in schema order (class 1..9, self study 1..9 —
// always present) followed by any other observed labels, sorted. Shares
// are count / group event total (0 when the group is empty).
struct InteractionHeatmap {
    std::vector<std::string> sections;
    std::vector<std::uint64_t> counts_a;
    std::vector<std::uint64_t> counts_b;
    std::vector<double> shares_a;
    std::vector<double> shares_b;
};

InteractionHeatmap interaction_heatmap(const EventLog& group_a, const EventLog& group_b);

// group,section,count,share
void write_heatmap_csv(const InteractionHeatmap& heatmap, std::ostream& out);

// Fraction of cases whose first event carries each section, sorted by
// fraction descending then label. Fractions sum to 1. Throws
// EmptyResultError on an empty log.
std::vector<std::pair<std::string, double>> first_section_distribution(const EventLog& log);

// Fraction of cases visiting the section at least once; 0.0 for a
// label never seen.
double section_reach(const EventLog& log, std::string_view section);

// section,fraction
void write_distribution_csv(std::span<const std::pair<std::string, double>> rows,
                            std::ostream& out);

}  // namespace flowforge
