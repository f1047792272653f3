#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "flowforge/model.hpp"

namespace flowforge {

// One rejected row; parsing keeps going so a single bad row does not
// abort a large export.
struct RowError {
    std::uint64_t line = 0;
    std::string message;
};

struct ParseOptions {
    // How many row errors to keep verbatim; everything past the cap is
    // still counted in `total_errors`.
    std::size_t error_cap = 100;
};

struct EventParseResult {
    std::vector<RawEvent> events;  // in file order; `row` is the file position
    std::vector<RowError> errors;
    std::size_t total_errors = 0;
};

struct ScoreParseResult {
    std::vector<ScoreRecord> records;
    std::vector<RowError> errors;
    std::size_t total_errors = 0;
    std::size_t dropped_out_of_range = 0;  // score outside [0,100]
};

// Event CSV: Timestamp, Course Name, CourseID, Event, Section, UserID.
// Header match is case- and order-insensitive; a missing or extra column
// is fatal (InputError). An empty Section cell becomes an absent section.
EventParseResult parse_event_csv(std::istream& in, const ParseOptions& opt = {});

// Score CSV: CourseID, UserID, Score. Rows with a score outside [0,100]
// are dropped and counted, not errors.
ScoreParseResult parse_score_csv(std::istream& in, const ParseOptions& opt = {});

struct JoinReport {
    std::size_t joined_events = 0;
    std::size_t dropped_events = 0;   // no score for (course, user)
    std::size_t unmatched_scores = 0; // score rows no event referenced
};

// Inner join on (course_id, user_id). Case ids start out per-course
// (the user id); later stages rebuild them for other scopes. A duplicate
// (course_id, user_id) score row is an ambiguous grade and fatal.
std::vector<ScoredEvent> join_events_scores(std::span<const RawEvent> events,
                                            std::span<const ScoreRecord> scores,
                                            JoinReport& report);

struct RemovedCourse {
    std::string course_id;
    std::string course_name;
    std::size_t events_removed = 0;
};

struct FilterReport {
    std::vector<RemovedCourse> removed;  // sorted by course_id
    std::size_t events_removed = 0;
    std::size_t events_kept = 0;
};

// Drops every event of a course with fewer than `min_course_events`
// events in `events` (strictly fewer; a course at the threshold stays).
std::vector<ScoredEvent> apply_quality_filters(std::vector<ScoredEvent> events,
                                               std::size_t min_course_events,
                                               FilterReport& report);

// Same filter on unjoined events, for pipelines that cut small courses
// before the score join.
std::vector<RawEvent> apply_quality_filters(std::vector<RawEvent> events,
                                            std::size_t min_course_events,
                                            FilterReport& report);

// Re-serialization of the event CSV (same header and timestamp format),
// used for the prepared file and parse/write round trips.
void write_event_csv(std::ostream& out, std::span<const RawEvent> events);

void write_score_csv(std::ostream& out, std::span<const ScoreRecord> scores);

// Prepared file: the six event columns plus Score and CaseID.
void write_prepared_csv(std::ostream& out, std::span<const ScoredEvent> events);

struct PreparedParseResult {
    std::vector<ScoredEvent> events;
    std::vector<RowError> errors;
    std::size_t total_errors = 0;
};

PreparedParseResult parse_prepared_csv(std::istream& in, const ParseOptions& opt = {});

}  // namespace flowforge
