#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowforge/compare.hpp"
#include "flowforge/grouping.hpp"
#include "flowforge/harmonize.hpp"
#include "flowforge/ingest.hpp"
#include "flowforge/model.hpp"
#include "flowforge/report.hpp"

namespace flowforge {

// File-level pipeline stages behind the CLI subcommands. Each run_*
// reads and writes files, returns a summary for console display, and
// signals failures through InputError (unreadable/invalid input) or
// EmptyResultError (nothing left to process). Flag validation that the
// CLI cannot express arrives as std::invalid_argument.

struct PrepareOptions {
    std::string events_path;
    std::string scores_path;
    std::string output_path = "prepared.csv";
    std::string course;      // keep only this course name; empty = all
    std::string rules_path;  // harmonization rules; empty = built-in table
    bool cross_course = false;
    bool drop_self_loops = false;
    bool filter_before_join = false;  // quality-filter raw events instead
    std::size_t min_course_events = 100;
    std::size_t error_cap = 100;
};

struct PrepareSummary {
    std::size_t events_read = 0;
    std::size_t scores_read = 0;
    std::size_t event_row_errors = 0;
    std::size_t score_row_errors = 0;
    std::size_t scores_out_of_range = 0;
    JoinReport join;
    FilterReport filter;
    ReplacementReport replacements;
    std::size_t non_standard_removed = 0;
    std::size_t self_loops_removed = 0;
    std::size_t events_written = 0;
    std::size_t cases_written = 0;
    std::vector<RowError> sample_errors;  // capped, for console display
    std::string output_path;
    std::string join_report_path;
    std::string filter_report_path;
    std::string replacement_report_path;  // empty unless harmonization ran
};

PrepareSummary run_prepare(const PrepareOptions& options);

struct SplitOptions {
    std::string prepared_path;
    std::string output_base = "log";
    CaseScope scope = CaseScope::PerCourse;
    Aggregation aggregation = Aggregation::Activity;  // cross scope needs section
    bool tie_to_a = false;
    std::size_t error_cap = 100;
};

struct SplitSummary {
    std::vector<CourseSplit> splits;
    std::size_t cases_a = 0, cases_b = 0;
    std::size_t events_a = 0, events_b = 0;  // as exported
    std::size_t dropped_missing_label = 0;
    std::string group_a_path, group_b_path, report_path;
};

SplitSummary run_split(const SplitOptions& options);

struct CompareCmdOptions {
    std::string group_a_path;
    std::string group_b_path;
    std::string output_base = "diff";
    double alpha = 0.05;
    bool filtered = false;               // apply the default 0.10 cut
    std::optional<double> filter_frac;   // explicit cut wins over --filtered
    bool bonferroni = false;
    std::size_t min_group_cases = 2;
};

struct CompareSummary {
    ComparisonResult result;
    std::size_t significant = 0;
    std::string dot_path, csv_path;
};

CompareSummary run_compare(const CompareCmdOptions& options);

struct StatsOptions {
    // Either one prepared CSV (split per scope/tie_to_a below) or two
    // section-level XES files (group A, group B).
    std::vector<std::string> inputs;
    std::string output_dir = "stats";
    CaseScope scope = CaseScope::PerCourse;
    bool tie_to_a = false;
    std::size_t error_cap = 100;
};

struct StatsSummary {
    std::size_t cases_a = 0, cases_b = 0;
    SectionChangeSummary changes;
    std::vector<std::string> written;
};

StatsSummary run_stats(const StatsOptions& options);

struct SynthOptions {
    std::string profile_a_path;
    std::string profile_b_path;
    std::string output_dir = "synth";
    std::uint64_t seed = 42;
};

struct SynthSummary {
    std::size_t events = 0;
    std::size_t cases = 0;
    std::string events_path, scores_path;
};

SynthSummary run_synth(const SynthOptions& options);

}  // namespace flowforge
