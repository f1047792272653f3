#include "flowforge/report.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "flowforge/csv.hpp"
#include "flowforge/errors.hpp"
#include "flowforge/stats.hpp"

namespace flowforge {
namespace {

std::vector<std::size_t> per_case_changes(const EventLog& log) {
    std::vector<std::size_t> out;
    out.reserve(log.traces.size());
    for (const Trace& trace : log.traces) out.push_back(section_change_count(trace));
    return out;
}

double mean_of(const std::vector<std::size_t>& v) {
    if (v.empty()) return 0.0;
    return static_cast<double>(std::accumulate(v.begin(), v.end(), std::uint64_t{0})) /
           static_cast<double>(v.size());
}

double median_of(const std::vector<std::size_t>& v) {
    std::vector<double> d(v.begin(), v.end());
    return median(std::move(d));
}

std::vector<std::string> schema_sections() {
    std::vector<std::string> out;
    out.reserve(18);
    for (int i = 1; i <= 9; ++i) out.push_back("class " + std::to_string(i));
    for (int i = 1; i <= 9; ++i) out.push_back("self study " + std::to_string(i));
    return out;
}

}  // namespace

std::size_t section_change_count(const Trace& trace) {
    std::size_t changes = 0;
    for (std::size_t i = 1; i < trace.events.size(); ++i) {
        if (trace.events[i].activity != trace.events[i - 1].activity) ++changes;
    }
    return changes;
}

SectionChangeSummary group_section_change_summary(const EventLog& group_a,
                                                  const EventLog& group_b) {
    if (group_a.traces.empty() || group_b.traces.empty()) {
        throw EmptyResultError("section-change summary needs at least one case per group");
    }
    SectionChangeSummary summary;
    summary.per_case_a = per_case_changes(group_a);
    summary.per_case_b = per_case_changes(group_b);
    summary.median_a = median_of(summary.per_case_a);
    summary.median_b = median_of(summary.per_case_b);
    summary.mean_a = mean_of(summary.per_case_a);
    summary.mean_b = mean_of(summary.per_case_b);
    summary.ratio = summary.median_a / summary.median_b;
    return summary;
}

InteractionHeatmap interaction_heatmap(const EventLog& group_a, const EventLog& group_b) {
    InteractionHeatmap heatmap;
    heatmap.sections = schema_sections();
    std::set<std::string> schema(heatmap.sections.begin(), heatmap.sections.end());

    auto count = [&](const EventLog& log) {
        std::map<std::string, std::uint64_t> counts;
        for (const Trace& trace : log.traces) {
            for (const TraceEvent& event : trace.events) counts[event.activity] += 1;
        }
        return counts;
    };
    std::map<std::string, std::uint64_t> counts_a = count(group_a);
    std::map<std::string, std::uint64_t> counts_b = count(group_b);

    std::set<std::string> extras;
    for (const auto& [label, n] : counts_a)
        if (!schema.count(label)) extras.insert(label);
    for (const auto& [label, n] : counts_b)
        if (!schema.count(label)) extras.insert(label);
    heatmap.sections.insert(heatmap.sections.end(), extras.begin(), extras.end());

    std::uint64_t total_a = 0, total_b = 0;
    for (const std::string& section : heatmap.sections) {
        auto a = counts_a.find(section);
        auto b = counts_b.find(section);
        heatmap.counts_a.push_back(a == counts_a.end() ? 0 : a->second);
        heatmap.counts_b.push_back(b == counts_b.end() ? 0 : b->second);
        total_a += heatmap.counts_a.back();
        total_b += heatmap.counts_b.back();
    }
    for (std::size_t i = 0; i < heatmap.sections.size(); ++i) {
        heatmap.shares_a.push_back(
            total_a == 0 ? 0.0
                         : static_cast<double>(heatmap.counts_a[i]) / static_cast<double>(total_a));
        heatmap.shares_b.push_back(
            total_b == 0 ? 0.0
                         : static_cast<double>(heatmap.counts_b[i]) / static_cast<double>(total_b));
    }
    return heatmap;
}

void write_heatmap_csv(const InteractionHeatmap& heatmap, std::ostream& out) {
    csv::write_row(out, {"group", "section", "count", "share"});
    for (std::size_t i = 0; i < heatmap.sections.size(); ++i) {
        csv::write_row(out, {"A", heatmap.sections[i], std::to_string(heatmap.counts_a[i]),
                             csv::format_double(heatmap.shares_a[i])});
    }
    for (std::size_t i = 0; i < heatmap.sections.size(); ++i) {
        csv::write_row(out, {"B", heatmap.sections[i], std::to_string(heatmap.counts_b[i]),
                             csv::format_double(heatmap.shares_b[i])});
    }
}

std::vector<std::pair<std::string, double>> first_section_distribution(const EventLog& log) {
    if (log.traces.empty()) {
        throw EmptyResultError("first-section distribution of an empty log");
    }
    std::map<std::string, std::size_t> counts;
    std::size_t cases = 0;
    for (const Trace& trace : log.traces) {
        if (trace.events.empty()) continue;
        counts[trace.events.front().activity] += 1;
        ++cases;
    }
    if (cases == 0) {
        throw EmptyResultError("first-section distribution of a log with no events");
    }
    std::vector<std::pair<std::string, double>> out;
    out.reserve(counts.size());
    for (const auto& [section, n] : counts) {
        out.emplace_back(section, static_cast<double>(n) / static_cast<double>(cases));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });
    return out;
}

double section_reach(const EventLog& log, std::string_view section) {
    if (log.traces.empty()) return 0.0;
    std::size_t visiting = 0;
    for (const Trace& trace : log.traces) {
        for (const TraceEvent& event : trace.events) {
            if (event.activity == section) {
                ++visiting;
                break;
            }
        }
    }
    return static_cast<double>(visiting) / static_cast<double>(log.traces.size());
}

void write_distribution_csv(std::span<const std::pair<std::string, double>> rows,
                            std::ostream& out) {
    csv::write_row(out, {"section", "fraction"});
    for (const auto& [section, fraction] : rows) {
        csv::write_row(out, {section, csv::format_double(fraction)});
    }
}

}  // namespace flowforge
