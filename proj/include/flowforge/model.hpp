#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flowforge {

// An instant with the UTC offset it was recorded at. Stored as UTC epoch
// milliseconds plus the offset, so both the instant and the original wall
// clock survive a round trip through any of the serialized formats.
struct Timestamp {
    std::int64_t epoch_ms = 0;
    std::int16_t offset_minutes = 0;

    // "2022-08-30 17:25:20.000 +0200" (the event CSV format)
    static Timestamp parse_log(std::string_view text);
    // "2022-08-30T17:25:20.000+02:00" (XES); also accepts a trailing "Z"
    static Timestamp parse_iso8601(std::string_view text);

    std::string to_log_format() const;
    std::string to_iso8601() const;

    bool operator==(const Timestamp&) const = default;
};

// One clickstream row as exported from the LMS.
struct RawEvent {
    Timestamp timestamp;
    std::string course_name;
    std::string course_id;
    std::string event_name;
    std::optional<std::string> section;
    std::string user_id;
    // Position in the source file; breaks timestamp ties deterministically.
    std::uint64_t row = 0;
};

struct ScoreRecord {
    std::string course_id;
    std::string user_id;
    double score = 0.0;
};

enum class CaseScope { PerCourse, CrossCourse };

struct CaseId {
    CaseScope scope = CaseScope::PerCourse;
    std::string value;

    bool operator==(const CaseId&) const = default;
    auto operator<=>(const CaseId&) const = default;
};

// RawEvent joined with its final score and tagged with a case.
struct ScoredEvent {
    RawEvent event;
    double score = 0.0;
    CaseId case_id;
};

enum class GroupLabel { A, B };  // A = higher-performing half

enum class Aggregation { Activity, Section, CrossCourseSection };

struct TraceEvent {
    Timestamp timestamp;
    std::string activity;
    std::uint64_t row = 0;

    // row is ordering metadata, not content
    bool operator==(const TraceEvent& o) const {
        return timestamp == o.timestamp && activity == o.activity;
    }
};

struct Trace {
    CaseId case_id;
    std::vector<TraceEvent> events;  // never empty, time-ordered

    bool operator==(const Trace&) const = default;
};

struct EventLog {
    Aggregation aggregation = Aggregation::Activity;
    std::vector<Trace> traces;

    std::size_t case_count() const { return traces.size(); }
    std::size_t event_count() const;

    bool operator==(const EventLog&) const = default;
};

// Input to the log builder: one event already projected onto a case and
// an activity label.
struct LogRow {
    CaseId case_id;
    Timestamp timestamp;
    std::string activity;
    std::uint64_t row = 0;
};

// Groups rows into traces. Events are ordered by (timestamp, row) within
// each trace and traces by the same key of their first event, so any
// permutation of the same rows builds the same log.
EventLog make_event_log(Aggregation aggregation, std::vector<LogRow> rows);

const char* to_string(Aggregation a);
std::optional<Aggregation> aggregation_from_string(std::string_view s);

}  // namespace flowforge
