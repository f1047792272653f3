#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>

#include "flowforge/mining.hpp"
#include "flowforge/model.hpp"
#include "flowforge/stats.hpp"

namespace flowforge {

struct ComparisonConfig {
    double alpha = 0.05;
    // An element whose support (cases visiting it at least once) stays
    // below this in *both* groups is reported but never flagged.
    std::size_t min_group_cases = 2;
    // Applied to the pooled system before testing; 0 disables.
    double filter_fraction = 0.0;
    bool bonferroni = false;
};

enum class Direction { None, MoreInA, MoreInB };

struct ElementComparison {
    double mean_a = 0.0;
    double mean_b = 0.0;
    std::size_t support_a = 0;
    std::size_t support_b = 0;
    WelchResult welch;
    bool low_support = false;
    bool significant = false;
    Direction direction = Direction::None;
};

struct ComparisonResult {
    Aggregation aggregation = Aggregation::Activity;
    std::size_t cases_a = 0;
    std::size_t cases_b = 0;
    double alpha_effective = 0.0;
    std::map<Node, ElementComparison> states;
    std::map<Edge, ElementComparison> transitions;
    FilterSummary filter;
};

// Pools both logs into one transition system (so each group holds a
// full occurrence vector, zeros included, over the union of elements),
// optionally drops low-frequency elements, then runs Welch's t-test per
// state and transition. Significant means p <= alpha (Bonferroni-
// corrected when enabled) with distinct group means and enough support.
// Both logs must carry the same aggregation level and at least
// max(2, min_group_cases) cases each.
ComparisonResult compare_groups(const EventLog& group_a, const EventLog& group_b,
                                const ComparisonConfig& config = {});

// Graphviz digraph; nodes/edges colored by direction (A = blue shades,
// B = red shades, not significant = gray) and labeled
// "name\nmean_A | mean_B\np=...".
void export_dot(const ComparisonResult& result, std::ostream& out);

// One row per element: element,kind,mean_a,mean_b,t,df,p,significant,
// direction.
void write_comparison_csv(const ComparisonResult& result, std::ostream& out);

}  // namespace flowforge
