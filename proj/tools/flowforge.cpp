#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowforge/errors.hpp"
#include "flowforge/pipeline.hpp"

namespace {

using flowforge::Aggregation;
using flowforge::CaseScope;

void print_row_errors(const std::vector<flowforge::RowError>& errors, std::size_t total) {
    if (total == 0) return;
    std::cerr << total << " row error(s); first " << errors.size() << ":\n";
    for (const auto& error : errors) {
        std::cerr << "  line " << error.line << ": " << error.message << "\n";
    }
}

int do_prepare(const flowforge::PrepareOptions& options) {
    flowforge::PrepareSummary s = flowforge::run_prepare(options);
    print_row_errors(s.sample_errors, s.event_row_errors + s.score_row_errors);
    std::cout << "read " << s.events_read << " events, " << s.scores_read << " scores";
    if (s.scores_out_of_range > 0) {
        std::cout << " (" << s.scores_out_of_range << " scores out of range)";
    }
    std::cout << "\njoined " << s.join.joined_events << " events, dropped "
              << s.join.dropped_events << " without a score\n";
    if (!s.filter.removed.empty()) {
        std::cout << "quality filter removed " << s.filter.removed.size() << " course(s), "
                  << s.filter.events_removed << " events\n";
    }
    if (!s.replacement_report_path.empty()) {
        std::cout << "harmonized into " << s.replacements.size() << " standardized title(s), "
                  << s.non_standard_removed << " non-standard events removed\n";
    }
    if (options.drop_self_loops) {
        std::cout << "removed " << s.self_loops_removed << " self-loop events\n";
    }
    std::cout << "wrote " << s.output_path << ": " << s.events_written << " events, "
              << s.cases_written << " cases\n";
    std::cout << "reports: " << s.join_report_path << ", " << s.filter_report_path;
    if (!s.replacement_report_path.empty()) std::cout << ", " << s.replacement_report_path;
    std::cout << "\n";
    return 0;
}

int do_split(const flowforge::SplitOptions& options) {
    flowforge::SplitSummary s = flowforge::run_split(options);
    for (const auto& split : s.splits) {
        std::cout << (split.course_id == "*" ? "all courses" : split.course_id) << ": median "
                  << split.median << ", " << split.cases_a << "/" << split.cases_b << " cases\n";
    }
    if (s.dropped_missing_label > 0) {
        std::cout << "dropped " << s.dropped_missing_label << " events without a section\n";
    }
    std::cout << "wrote " << s.group_a_path << " (" << s.cases_a << " cases, " << s.events_a
              << " events)\n";
    std::cout << "wrote " << s.group_b_path << " (" << s.cases_b << " cases, " << s.events_b
              << " events)\n";
    std::cout << "report: " << s.report_path << "\n";
    return 0;
}

int do_compare(const flowforge::CompareCmdOptions& options) {
    flowforge::CompareSummary s = flowforge::run_compare(options);
    const std::size_t elements = s.result.states.size() + s.result.transitions.size();
    std::cout << "compared " << s.result.cases_a << " vs " << s.result.cases_b << " cases over "
              << elements << " elements (alpha " << s.result.alpha_effective << ")\n";
    if (!s.result.filter.removed_states.empty() || !s.result.filter.removed_transitions.empty()) {
        std::cout << "low-frequency filter removed " << s.result.filter.removed_states.size()
                  << " states, " << s.result.filter.removed_transitions.size()
                  << " transitions\n";
    }
    std::cout << s.significant << " element(s) differ significantly\n";
    std::cout << "wrote " << s.dot_path << ", " << s.csv_path << "\n";
    return 0;
}

int do_stats(const flowforge::StatsOptions& options) {
    flowforge::StatsSummary s = flowforge::run_stats(options);
    std::cout << "group A: " << s.cases_a << " cases, median " << s.changes.median_a
              << " section changes\n";
    std::cout << "group B: " << s.cases_b << " cases, median " << s.changes.median_b
              << " section changes (ratio " << s.changes.ratio << ")\n";
    for (const std::string& path : s.written) std::cout << "wrote " << path << "\n";
    return 0;
}

int do_synth(const flowforge::SynthOptions& options) {
    flowforge::SynthSummary s = flowforge::run_synth(options);
    std::cout << "generated " << s.events << " events across " << s.cases << " cases\n";
    std::cout << "wrote " << s.events_path << ", " << s.scores_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clickstream preparation and cohort process-map comparison"};
    app.set_version_flag("--version", "flowforge 1.0.0");
    app.set_config("--config")->description("key = value file mirroring the flags");
    app.require_subcommand(1);

    const std::map<std::string, CaseScope> scope_names{{"course", CaseScope::PerCourse},
                                                       {"cross", CaseScope::CrossCourse}};
    const std::map<std::string, Aggregation> aggregation_names{
        {"activity", Aggregation::Activity}, {"section", Aggregation::Section}};

    auto add_subcommand = [&](const std::string& name, const std::string& description) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->fallthrough();   // a trailing --config reaches the app
        sub->configurable();  // [section] blocks in the config apply
        return sub;
    };

    flowforge::PrepareOptions prepare;
    CLI::App* cmd_prepare =
        add_subcommand("prepare", "Join events with scores, filter, and write a prepared CSV");
    cmd_prepare->add_option("events", prepare.events_path, "event CSV")->required();
    cmd_prepare->add_option("scores", prepare.scores_path, "score CSV")->required();
    cmd_prepare->add_option("-o,--output", prepare.output_path, "prepared CSV path")
        ->capture_default_str();
    cmd_prepare->add_option("--course", prepare.course, "keep only this course name");
    cmd_prepare->add_flag("--cross-course", prepare.cross_course,
                          "harmonize sections, keep the standardized schema, use course::user cases");
    cmd_prepare->add_flag("--drop-self-loops", prepare.drop_self_loops,
                          "drop consecutive same-section events per case");
    CLI::Option* rules_option =
        cmd_prepare->add_option("--rules", prepare.rules_path, "harmonization rule file")
            ->check(CLI::ExistingFile);
    rules_option->needs(cmd_prepare->get_option("--cross-course"));
    cmd_prepare
        ->add_option("--min-course-events", prepare.min_course_events,
                     "drop courses with fewer events")
        ->capture_default_str();
    cmd_prepare->add_flag("--filter-before-join", prepare.filter_before_join,
                          "apply the course filter to raw events before the score join");
    cmd_prepare->add_option("--error-cap", prepare.error_cap, "row errors to report verbatim")
        ->capture_default_str();

    flowforge::SplitOptions split;
    CLI::App* cmd_split =
        add_subcommand("split", "Median-split a prepared CSV and export XES per group");
    cmd_split->add_option("prepared", split.prepared_path, "prepared CSV")->required();
    cmd_split->add_option("-o,--output", split.output_base, "output base path")
        ->capture_default_str();
    cmd_split->add_option("--scope", split.scope, "case scope")
        ->transform(CLI::CheckedTransformer(scope_names, CLI::ignore_case))
        ->default_str("course");
    cmd_split->add_option("--aggregation", split.aggregation, "activity label source")
        ->transform(CLI::CheckedTransformer(aggregation_names, CLI::ignore_case))
        ->default_str("activity");
    cmd_split->add_flag("--tie-to-a", split.tie_to_a, "scores equal to the median go to group A");
    cmd_split->add_option("--error-cap", split.error_cap, "row errors to report verbatim")
        ->capture_default_str();

    flowforge::CompareCmdOptions compare;
    CLI::App* cmd_compare =
        add_subcommand("compare", "Compare two XES cohorts and write DOT + CSV");
    cmd_compare->add_option("groupA", compare.group_a_path, "group A XES")->required();
    cmd_compare->add_option("groupB", compare.group_b_path, "group B XES")->required();
    cmd_compare->add_option("-o,--output", compare.output_base, "output base path")
        ->capture_default_str();
    cmd_compare->add_option("--alpha", compare.alpha, "significance level")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd_compare->add_flag("--filtered", compare.filtered,
                          "drop the lowest-frequency 10% of states and transitions");
    cmd_compare
        ->add_option("--filter-frac", compare.filter_frac,
                     "low-frequency cut fraction (implies --filtered)")
        ->check(CLI::Range(0.0, 0.999));
    cmd_compare->add_flag("--bonferroni", compare.bonferroni,
                          "divide alpha by the number of tested elements");
    cmd_compare
        ->add_option("--min-group-cases", compare.min_group_cases,
                     "support needed in at least one group to flag an element")
        ->capture_default_str();

    flowforge::StatsOptions stats;
    CLI::App* cmd_stats = add_subcommand(
        "stats", "Navigation statistics (heatmap, section changes, first/reach) per group");
    cmd_stats
        ->add_option("inputs", stats.inputs,
                     "one prepared CSV (split here) or two section-level XES files")
        ->expected(1, 2)
        ->required();
    cmd_stats->add_option("-o,--output", stats.output_dir, "output directory")
        ->capture_default_str();
    cmd_stats->add_option("--scope", stats.scope, "case scope for a prepared input")
        ->transform(CLI::CheckedTransformer(scope_names, CLI::ignore_case))
        ->default_str("course");
    cmd_stats->add_flag("--tie-to-a", stats.tie_to_a, "scores equal to the median go to group A");
    cmd_stats->add_option("--error-cap", stats.error_cap, "row errors to report verbatim")
        ->capture_default_str();

    flowforge::SynthOptions synth;
    CLI::App* cmd_synth =
        add_subcommand("synth", "Generate a synthetic two-cohort clickstream");
    cmd_synth->add_option("profileA", synth.profile_a_path, "group A behavior profile")
        ->required();
    cmd_synth->add_option("profileB", synth.profile_b_path, "group B behavior profile")
        ->required();
    cmd_synth->add_option("-o,--output", synth.output_dir, "output directory")
        ->capture_default_str();
    cmd_synth->add_option("--seed", synth.seed, "generator seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n(run with --help for usage)\n";
        return 1;
    }

    try {
        if (cmd_prepare->parsed()) return do_prepare(prepare);
        if (cmd_split->parsed()) return do_split(split);
        if (cmd_compare->parsed()) return do_compare(compare);
        if (cmd_stats->parsed()) return do_stats(stats);
        if (cmd_synth->parsed()) return do_synth(synth);
    } catch (const flowforge::EmptyResultError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const flowforge::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
