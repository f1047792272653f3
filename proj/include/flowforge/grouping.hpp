#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flowforge/model.hpp"

namespace flowforge {

inline constexpr std::string_view kCaseSeparator = "::";

// Per-course cases are the user id; cross-course cases combine course
// and user so one student in two courses is two cases. Ids must be
// non-empty and free of the separator.
CaseId build_case_id(std::string_view course_id, std::string_view user_id,
                     CaseScope scope);

struct MedianSplit {
    std::vector<CaseId> group_a;  // score strictly above the median
    std::vector<CaseId> group_b;  // the rest
    double median = 0.0;
};

// Splits cases at the sample median of their scores. Ties go to group B
// unless tie_to_a is set. Requires at least one case, one score each.
MedianSplit median_split(std::span<const std::pair<CaseId, double>> cases,
                         bool tie_to_a = false);

struct ProjectedLog {
    EventLog log;
    std::size_t dropped_missing_label = 0;
};

// Projects scored events onto (case, activity) per the aggregation
// level: the activity label is the event name at Activity level and the
// section otherwise. Rows missing the label column are dropped and
// counted.
ProjectedLog project_event_log(std::span<const ScoredEvent> events,
                               Aggregation aggregation, CaseScope scope);

struct CourseSplit {
    std::string course_id;   // "*" for the cross-course split
    std::string course_name;
    double median = 0.0;
    std::size_t cases_a = 0, cases_b = 0;
    std::size_t events_a = 0, events_b = 0;
};

struct GroupedEvents {
    std::vector<ScoredEvent> group_a;
    std::vector<ScoredEvent> group_b;
    std::vector<CourseSplit> splits;  // one per course, or one for cross scope
};

// Full cohort split: per-course scope computes one median per course,
// cross-course one median over all (course, user) cases. Event case ids
// are rebuilt for the scope.
GroupedEvents split_by_median(std::vector<ScoredEvent> events, CaseScope scope,
                              bool tie_to_a = false);

}  // namespace flowforge
