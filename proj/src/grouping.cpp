#include "flowforge/grouping.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "flowforge/errors.hpp"
#include "flowforge/stats.hpp"

namespace flowforge {

CaseId build_case_id(std::string_view course_id, std::string_view user_id,
                     CaseScope scope) {
    if (course_id.empty() || user_id.empty())
        throw std::invalid_argument("case id parts must be non-empty");
    if (course_id.find(kCaseSeparator) != std::string_view::npos ||
        user_id.find(kCaseSeparator) != std::string_view::npos)
        throw InputError("id contains the reserved case separator \"::\": \"" +
                         std::string(course_id) + "\" / \"" + std::string(user_id) +
                         "\"");
    if (scope == CaseScope::PerCourse) return CaseId{scope, std::string(user_id)};
    std::string value;
    value.reserve(course_id.size() + kCaseSeparator.size() + user_id.size());
    value.append(course_id);
    value.append(kCaseSeparator);
    value.append(user_id);
    return CaseId{scope, std::move(value)};
}

MedianSplit median_split(std::span<const std::pair<CaseId, double>> cases,
                         bool tie_to_a) {
    if (cases.empty()) throw std::invalid_argument("median_split on empty input");

    std::unordered_set<std::string> seen;
    std::vector<double> scores;
    scores.reserve(cases.size());
    for (const auto& [id, score] : cases) {
        if (!seen.insert(id.value).second)
            throw std::invalid_argument("duplicate case id \"" + id.value +
                                        "\" in median_split");
        scores.push_back(score);
    }

    MedianSplit out;
    out.median = median(std::move(scores));
    for (const auto& [id, score] : cases) {
        bool to_a = tie_to_a ? score >= out.median : score > out.median;
        (to_a ? out.group_a : out.group_b).push_back(id);
    }
    std::sort(out.group_a.begin(), out.group_a.end());
    std::sort(out.group_b.begin(), out.group_b.end());
    return out;
}

ProjectedLog project_event_log(std::span<const ScoredEvent> events,
                               Aggregation aggregation, CaseScope scope) {
    ProjectedLog out;
    std::vector<LogRow> rows;
    rows.reserve(events.size());
    for (const auto& se : events) {
        const RawEvent& ev = se.event;
        std::string label;
        if (aggregation == Aggregation::Activity) {
            label = ev.event_name;
        } else if (ev.section) {
            label = *ev.section;
        }
        if (label.empty()) {
            ++out.dropped_missing_label;
            continue;
        }
        rows.push_back(LogRow{build_case_id(ev.course_id, ev.user_id, scope),
                              ev.timestamp, std::move(label), ev.row});
    }
    out.log = make_event_log(aggregation, std::move(rows));
    return out;
}

GroupedEvents split_by_median(std::vector<ScoredEvent> events, CaseScope scope,
                              bool tie_to_a) {
    GroupedEvents out;

    // course key -> (case value -> score); one bucket "*" for cross scope
    std::map<std::string, std::map<std::string, double>> buckets;
    for (const auto& se : events) {
        CaseId id = build_case_id(se.event.course_id, se.event.user_id, scope);
        std::string bucket = scope == CaseScope::CrossCourse ? "*" : se.event.course_id;
        auto [it, inserted] = buckets[bucket].emplace(id.value, se.score);
        if (!inserted && it->second != se.score)
            throw InputError("case \"" + id.value + "\" carries two scores");
    }

    std::unordered_map<std::string, GroupLabel> assignment;
    std::unordered_map<std::string, std::string> course_names;
    for (const auto& se : events)
        course_names.emplace(se.event.course_id, se.event.course_name);

    for (const auto& [bucket, case_scores] : buckets) {
        std::vector<std::pair<CaseId, double>> cases;
        cases.reserve(case_scores.size());
        for (const auto& [value, score] : case_scores)
            cases.push_back({CaseId{scope, value}, score});
        MedianSplit split = median_split(cases, tie_to_a);

        CourseSplit cs;
        cs.course_id = bucket;
        cs.course_name = bucket == "*" ? "(all courses)" : course_names[bucket];
        cs.median = split.median;
        cs.cases_a = split.group_a.size();
        cs.cases_b = split.group_b.size();
        for (const auto& id : split.group_a) assignment[id.value] = GroupLabel::A;
        for (const auto& id : split.group_b) assignment[id.value] = GroupLabel::B;
        out.splits.push_back(std::move(cs));
    }

    std::unordered_map<std::string, std::size_t> split_index;
    for (std::size_t i = 0; i < out.splits.size(); ++i)
        split_index[out.splits[i].course_id] = i;

    for (auto& se : events) {
        se.case_id = build_case_id(se.event.course_id, se.event.user_id, scope);
        std::string bucket = scope == CaseScope::CrossCourse ? "*" : se.event.course_id;
        CourseSplit& cs = out.splits[split_index[bucket]];
        if (assignment[se.case_id.value] == GroupLabel::A) {
            ++cs.events_a;
            out.group_a.push_back(std::move(se));
        } else {
            ++cs.events_b;
            out.group_b.push_back(std::move(se));
        }
    }
    return out;
}

}  // namespace flowforge
