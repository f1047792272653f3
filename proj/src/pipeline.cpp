#include "flowforge/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "flowforge/csv.hpp"
#include "flowforge/errors.hpp"
#include "flowforge/synth.hpp"
#include "flowforge/xes.hpp"

namespace flowforge {
namespace {

namespace fs = std::filesystem;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    fs::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    return out;
}

void close_output(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw InputError("write failed for '" + path + "'");
}

// prepared.csv -> prepared.join.csv and friends.
std::string with_suffix(const std::string& path, const std::string& suffix) {
    fs::path p(path);
    fs::path renamed = p.parent_path() / (p.stem().string() + suffix);
    return renamed.string();
}

void collect_errors(std::vector<RowError>& sink, const std::vector<RowError>& source,
                    std::size_t cap) {
    for (const RowError& error : source) {
        if (sink.size() >= cap) return;
        sink.push_back(error);
    }
}

std::size_t distinct_cases(const std::vector<ScoredEvent>& events) {
    std::set<std::pair<std::string, std::string>> keys;
    for (const ScoredEvent& event : events) {
        keys.emplace(event.event.course_id, event.event.user_id);
    }
    return keys.size();
}

EventLog read_xes_file(const std::string& path) {
    std::ifstream in = open_input(path);
    try {
        return read_xes(in);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<ScoredEvent> read_prepared(const std::string& path, std::size_t error_cap,
                                       std::vector<RowError>& errors_out,
                                       std::size_t& total_errors) {
    std::ifstream in = open_input(path);
    PreparedParseResult parsed;
    try {
        parsed = parse_prepared_csv(in, ParseOptions{error_cap});
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
    errors_out = std::move(parsed.errors);
    total_errors = parsed.total_errors;
    if (parsed.events.empty()) {
        throw EmptyResultError(path + ": no usable rows");
    }
    return parsed.events;
}

Aggregation effective_aggregation(CaseScope scope, Aggregation requested) {
    if (scope == CaseScope::CrossCourse) {
        if (requested == Aggregation::Activity) {
            throw std::invalid_argument(
                "cross-course analysis is defined on sections; use --aggregation section");
        }
        return Aggregation::CrossCourseSection;
    }
    return requested;
}

struct ProjectedPair {
    EventLog group_a, group_b;
    std::vector<CourseSplit> splits;
    std::size_t dropped_missing_label = 0;
};

ProjectedPair split_and_project(std::vector<ScoredEvent> events, CaseScope scope,
                                Aggregation aggregation, bool tie_to_a) {
    GroupedEvents grouped = split_by_median(std::move(events), scope, tie_to_a);
    if (grouped.group_a.empty() || grouped.group_b.empty()) {
        throw EmptyResultError(std::string("median split left group ") +
                               (grouped.group_a.empty() ? "A" : "B") + " empty");
    }
    ProjectedPair out;
    ProjectedLog a = project_event_log(grouped.group_a, aggregation, scope);
    ProjectedLog b = project_event_log(grouped.group_b, aggregation, scope);
    out.dropped_missing_label = a.dropped_missing_label + b.dropped_missing_label;
    if (a.log.traces.empty() || b.log.traces.empty()) {
        throw EmptyResultError(std::string("group ") + (a.log.traces.empty() ? "A" : "B") +
                               " has no events with a " +
                               (aggregation == Aggregation::Activity ? "label" : "section"));
    }
    out.group_a = std::move(a.log);
    out.group_b = std::move(b.log);
    out.splits = std::move(grouped.splits);
    return out;
}

}  // namespace

PrepareSummary run_prepare(const PrepareOptions& options) {
    PrepareSummary summary;
    const ParseOptions parse_options{options.error_cap};

    std::ifstream events_in = open_input(options.events_path);
    EventParseResult events;
    try {
        events = parse_event_csv(events_in, parse_options);
    } catch (const InputError& e) {
        throw InputError(options.events_path + ": " + e.what());
    }
    summary.events_read = events.events.size();
    summary.event_row_errors = events.total_errors;
    collect_errors(summary.sample_errors, events.errors, options.error_cap);

    std::ifstream scores_in = open_input(options.scores_path);
    ScoreParseResult scores;
    try {
        scores = parse_score_csv(scores_in, parse_options);
    } catch (const InputError& e) {
        throw InputError(options.scores_path + ": " + e.what());
    }
    summary.scores_read = scores.records.size();
    summary.score_row_errors = scores.total_errors;
    summary.scores_out_of_range = scores.dropped_out_of_range;
    collect_errors(summary.sample_errors, scores.errors, options.error_cap);

    std::vector<RawEvent> raw = std::move(events.events);
    if (options.filter_before_join) {
        raw = apply_quality_filters(std::move(raw), options.min_course_events, summary.filter);
    }

    std::vector<ScoredEvent> scored = join_events_scores(raw, scores.records, summary.join);
    raw.clear();
    raw.shrink_to_fit();
    if (!options.filter_before_join) {
        scored =
            apply_quality_filters(std::move(scored), options.min_course_events, summary.filter);
    }
    if (scored.empty()) {
        throw EmptyResultError("no events survived the score join and quality filter");
    }

    if (!options.course.empty()) {
        std::erase_if(scored, [&](const ScoredEvent& event) {
            return event.event.course_name != options.course;
        });
        if (scored.empty()) {
            throw EmptyResultError("no events for course '" + options.course + "'");
        }
    }

    if (options.cross_course) {
        if (options.rules_path.empty()) {
            summary.replacements = harmonize_sections(scored, default_rule_table());
        } else {
            std::ifstream rules_in = open_input(options.rules_path);
            RuleTable rules;
            try {
                rules = load_rule_table(rules_in);
            } catch (const InputError& e) {
                throw InputError(options.rules_path + ": " + e.what());
            }
            summary.replacements = harmonize_sections(scored, rules);
        }
        std::size_t before = scored.size();
        scored = filter_standardized(std::move(scored));
        summary.non_standard_removed = before - scored.size();
        if (scored.empty()) {
            throw EmptyResultError("no events with standardized sections remain");
        }
        for (ScoredEvent& event : scored) {
            event.case_id = build_case_id(event.event.course_id, event.event.user_id,
                                          CaseScope::CrossCourse);
        }
    }

    if (options.drop_self_loops) {
        std::size_t before = scored.size();
        scored = remove_self_loops(std::move(scored));
        summary.self_loops_removed = before - scored.size();
    }

    summary.events_written = scored.size();
    summary.cases_written = distinct_cases(scored);
    summary.output_path = options.output_path;

    std::ofstream out = open_output(options.output_path);
    write_prepared_csv(out, scored);
    close_output(out, options.output_path);

    summary.join_report_path = with_suffix(options.output_path, ".join.csv");
    {
        std::ofstream report = open_output(summary.join_report_path);
        csv::write_row(report, {"metric", "value"});
        csv::write_row(report, {"events_read", std::to_string(summary.events_read)});
        csv::write_row(report, {"event_row_errors", std::to_string(summary.event_row_errors)});
        csv::write_row(report, {"scores_read", std::to_string(summary.scores_read)});
        csv::write_row(report, {"score_row_errors", std::to_string(summary.score_row_errors)});
        csv::write_row(report,
                       {"scores_out_of_range", std::to_string(summary.scores_out_of_range)});
        csv::write_row(report, {"joined_events", std::to_string(summary.join.joined_events)});
        csv::write_row(report, {"dropped_events", std::to_string(summary.join.dropped_events)});
        csv::write_row(report,
                       {"unmatched_scores", std::to_string(summary.join.unmatched_scores)});
        csv::write_row(report,
                       {"non_standard_removed", std::to_string(summary.non_standard_removed)});
        csv::write_row(report,
                       {"self_loops_removed", std::to_string(summary.self_loops_removed)});
        csv::write_row(report, {"events_written", std::to_string(summary.events_written)});
        csv::write_row(report, {"cases_written", std::to_string(summary.cases_written)});
        close_output(report, summary.join_report_path);
    }

    summary.filter_report_path = with_suffix(options.output_path, ".filter.csv");
    {
        std::ofstream report = open_output(summary.filter_report_path);
        csv::write_row(report, {"course_id", "course_name", "events_removed"});
        for (const RemovedCourse& course : summary.filter.removed) {
            csv::write_row(report, {course.course_id, course.course_name,
                                    std::to_string(course.events_removed)});
        }
        close_output(report, summary.filter_report_path);
    }

    if (options.cross_course) {
        summary.replacement_report_path = with_suffix(options.output_path, ".replacements.csv");
        std::ofstream report = open_output(summary.replacement_report_path);
        csv::write_row(report, {"standardized", "distinct_originals"});
        for (const auto& [standardized, originals] : summary.replacements) {
            csv::write_row(report, {standardized, std::to_string(originals)});
        }
        close_output(report, summary.replacement_report_path);
    }
    return summary;
}

SplitSummary run_split(const SplitOptions& options) {
    const Aggregation aggregation = effective_aggregation(options.scope, options.aggregation);

    std::vector<RowError> errors;
    std::size_t total_errors = 0;
    std::vector<ScoredEvent> events =
        read_prepared(options.prepared_path, options.error_cap, errors, total_errors);

    ProjectedPair pair =
        split_and_project(std::move(events), options.scope, aggregation, options.tie_to_a);

    SplitSummary summary;
    summary.splits = std::move(pair.splits);
    summary.cases_a = pair.group_a.case_count();
    summary.cases_b = pair.group_b.case_count();
    summary.events_a = pair.group_a.event_count();
    summary.events_b = pair.group_b.event_count();
    summary.dropped_missing_label = pair.dropped_missing_label;

    summary.group_a_path = options.output_base + ".groupA.xes";
    summary.group_b_path = options.output_base + ".groupB.xes";
    summary.report_path = options.output_base + ".split.csv";

    {
        std::ofstream out = open_output(summary.group_a_path);
        write_xes(pair.group_a, out);
        close_output(out, summary.group_a_path);
    }
    {
        std::ofstream out = open_output(summary.group_b_path);
        write_xes(pair.group_b, out);
        close_output(out, summary.group_b_path);
    }
    {
        std::ofstream report = open_output(summary.report_path);
        csv::write_row(report, {"course_id", "course_name", "median", "cases_a", "cases_b",
                                "events_a", "events_b"});
        for (const CourseSplit& split : summary.splits) {
            csv::write_row(report,
                           {split.course_id, split.course_name, csv::format_double(split.median),
                            std::to_string(split.cases_a), std::to_string(split.cases_b),
                            std::to_string(split.events_a), std::to_string(split.events_b)});
        }
        close_output(report, summary.report_path);
    }
    return summary;
}

CompareSummary run_compare(const CompareCmdOptions& options) {
    EventLog group_a = read_xes_file(options.group_a_path);
    EventLog group_b = read_xes_file(options.group_b_path);

    ComparisonConfig config;
    config.alpha = options.alpha;
    config.min_group_cases = options.min_group_cases;
    config.bonferroni = options.bonferroni;
    config.filter_fraction =
        options.filter_frac ? *options.filter_frac : (options.filtered ? 0.10 : 0.0);

    CompareSummary summary;
    summary.result = compare_groups(group_a, group_b, config);
    for (const auto& [node, cmp] : summary.result.states) summary.significant += cmp.significant;
    for (const auto& [edge, cmp] : summary.result.transitions) {
        summary.significant += cmp.significant;
    }

    summary.dot_path = options.output_base + ".dot";
    summary.csv_path = options.output_base + ".csv";
    {
        std::ofstream out = open_output(summary.dot_path);
        export_dot(summary.result, out);
        close_output(out, summary.dot_path);
    }
    {
        std::ofstream out = open_output(summary.csv_path);
        write_comparison_csv(summary.result, out);
        close_output(out, summary.csv_path);
    }
    return summary;
}

StatsSummary run_stats(const StatsOptions& options) {
    EventLog group_a, group_b;
    if (options.inputs.size() == 2) {
        group_a = read_xes_file(options.inputs[0]);
        group_b = read_xes_file(options.inputs[1]);
        if (group_a.aggregation != group_b.aggregation) {
            throw InputError(std::string("aggregation levels differ: ") +
                             to_string(group_a.aggregation) + " vs " +
                             to_string(group_b.aggregation));
        }
        if (group_a.aggregation == Aggregation::Activity) {
            throw InputError("navigation statistics need section-level logs");
        }
    } else if (options.inputs.size() == 1) {
        std::vector<RowError> errors;
        std::size_t total_errors = 0;
        std::vector<ScoredEvent> events =
            read_prepared(options.inputs[0], options.error_cap, errors, total_errors);
        const Aggregation aggregation = options.scope == CaseScope::CrossCourse
                                            ? Aggregation::CrossCourseSection
                                            : Aggregation::Section;
        ProjectedPair pair =
            split_and_project(std::move(events), options.scope, aggregation, options.tie_to_a);
        group_a = std::move(pair.group_a);
        group_b = std::move(pair.group_b);
    } else {
        throw std::invalid_argument("stats needs one prepared CSV or two XES files");
    }

    StatsSummary summary;
    summary.cases_a = group_a.case_count();
    summary.cases_b = group_b.case_count();
    summary.changes = group_section_change_summary(group_a, group_b);
    SectionChangeSummary collapsed =
        group_section_change_summary(remove_self_loops(group_a), remove_self_loops(group_b));

    InteractionHeatmap heatmap = interaction_heatmap(group_a, group_b);

    const fs::path dir(options.output_dir);
    auto target = [&](const char* name) { return (dir / name).string(); };

    {
        std::string path = target("heatmap.csv");
        std::ofstream out = open_output(path);
        write_heatmap_csv(heatmap, out);
        close_output(out, path);
        summary.written.push_back(std::move(path));
    }
    {
        std::string path = target("summary.csv");
        std::ofstream out = open_output(path);
        csv::write_row(out, {"metric", "group_a", "group_b", "ratio"});
        auto row = [&](const char* metric, double a, double b) {
            csv::write_row(out, {metric, csv::format_double(a), csv::format_double(b),
                                 csv::format_double(a / b)});
        };
        const double cases_a = static_cast<double>(summary.cases_a);
        const double cases_b = static_cast<double>(summary.cases_b);
        const double events_a = static_cast<double>(group_a.event_count());
        const double events_b = static_cast<double>(group_b.event_count());
        row("cases", cases_a, cases_b);
        row("events", events_a, events_b);
        row("events_per_case_mean", events_a / cases_a, events_b / cases_b);
        row("section_changes_mean", summary.changes.mean_a, summary.changes.mean_b);
        row("section_changes_median", summary.changes.median_a, summary.changes.median_b);
        row("section_changes_median_no_self_loops", collapsed.median_a, collapsed.median_b);
        close_output(out, path);
        summary.written.push_back(std::move(path));
    }
    auto write_first = [&](const EventLog& log, const char* name) {
        std::string path = target(name);
        std::ofstream out = open_output(path);
        auto distribution = first_section_distribution(log);
        write_distribution_csv(distribution, out);
        close_output(out, path);
        summary.written.push_back(std::move(path));
    };
    write_first(group_a, "first.groupA.csv");
    write_first(group_b, "first.groupB.csv");

    auto write_reach = [&](const EventLog& log, const char* name) {
        std::string path = target(name);
        std::ofstream out = open_output(path);
        std::vector<std::pair<std::string, double>> rows;
        rows.reserve(heatmap.sections.size());
        for (const std::string& section : heatmap.sections) {
            rows.emplace_back(section, section_reach(log, section));
        }
        write_distribution_csv(rows, out);
        close_output(out, path);
        summary.written.push_back(std::move(path));
    };
    write_reach(group_a, "reach.groupA.csv");
    write_reach(group_b, "reach.groupB.csv");
    return summary;
}

SynthSummary run_synth(const SynthOptions& options) {
    BehaviorProfile profile_a = load_behavior_profile(options.profile_a_path);
    BehaviorProfile profile_b = load_behavior_profile(options.profile_b_path);
    SyntheticClickstream generated =
        generate_clickstream_pair(profile_a, profile_b, options.seed);

    SynthSummary summary;
    summary.events = generated.events.size();
    summary.cases = generated.scores.size();

    const fs::path dir(options.output_dir);
    summary.events_path = (dir / "events.csv").string();
    summary.scores_path = (dir / "scores.csv").string();
    {
        std::ofstream out = open_output(summary.events_path);
        write_event_csv(out, generated.events);
        close_output(out, summary.events_path);
    }
    {
        std::ofstream out = open_output(summary.scores_path);
        write_score_csv(out, generated.scores);
        close_output(out, summary.scores_path);
    }
    return summary;
}

}  // namespace flowforge
