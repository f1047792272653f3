#include "flowforge/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "flowforge/csv.hpp"
#include "flowforge/errors.hpp"

namespace flowforge {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

// Maps wanted column names to their positions in the header row.
// Order- and case-insensitive; the set must match exactly.
std::vector<std::size_t> resolve_header(const csv::Record& header,
                                        std::span<const std::string_view> wanted,
                                        const char* what) {
    if (header.fields.size() != wanted.size())
        throw InputError(std::string(what) + ": expected " +
                         std::to_string(wanted.size()) + " header columns, got " +
                         std::to_string(header.fields.size()));
    std::vector<std::size_t> index(wanted.size());
    std::vector<bool> used(header.fields.size(), false);
    for (std::size_t w = 0; w < wanted.size(); ++w) {
        bool found = false;
        for (std::size_t h = 0; h < header.fields.size(); ++h) {
            if (!used[h] && lower(header.fields[h]) == lower(wanted[w])) {
                index[w] = h;
                used[h] = true;
                found = true;
                break;
            }
        }
        if (!found)
            throw InputError(std::string(what) + ": missing header column \"" +
                             std::string(wanted[w]) + "\"");
    }
    return index;
}

void add_error(std::vector<RowError>& errors, std::size_t& total,
               const ParseOptions& opt, std::uint64_t line, std::string message) {
    ++total;
    if (errors.size() < opt.error_cap)
        errors.push_back(RowError{line, std::move(message)});
}

bool parse_double(std::string_view s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !s.empty();
}

constexpr std::string_view kEventColumns[] = {"Timestamp", "Course Name", "CourseID",
                                              "Event",     "Section",     "UserID"};
constexpr std::string_view kScoreColumns[] = {"CourseID", "UserID", "Score"};
constexpr std::string_view kPreparedColumns[] = {"Timestamp", "Course Name", "CourseID",
                                                 "Event",     "Section",     "UserID",
                                                 "Score",     "CaseID"};

// Shared row -> RawEvent conversion for the event and prepared readers.
bool read_event_fields(const csv::Record& rec, const std::vector<std::size_t>& col,
                       RawEvent& ev, std::string& error) {
    ev.timestamp = Timestamp::parse_log(rec.fields[col[0]]);  // may throw
    ev.course_name = rec.fields[col[1]];
    ev.course_id = rec.fields[col[2]];
    ev.event_name = rec.fields[col[3]];
    const std::string& section = rec.fields[col[4]];
    ev.section = section.empty() ? std::nullopt : std::make_optional(section);
    ev.user_id = rec.fields[col[5]];
    if (ev.course_id.empty()) {
        error = "empty CourseID";
        return false;
    }
    if (ev.user_id.empty()) {
        error = "empty UserID";
        return false;
    }
    return true;
}

}  // namespace

EventParseResult parse_event_csv(std::istream& in, const ParseOptions& opt) {
    csv::Reader reader(in);
    csv::Record rec;
    if (!reader.next(rec)) throw InputError("event csv: empty input, header expected");
    auto col = resolve_header(rec, kEventColumns, "event csv");

    EventParseResult result;
    std::uint64_t row = 0;
    while (reader.next(rec)) {
        if (rec.fields.size() != col.size()) {
            add_error(result.errors, result.total_errors, opt, rec.line,
                      "expected 6 fields, got " + std::to_string(rec.fields.size()));
            continue;
        }
        RawEvent ev;
        std::string error;
        try {
            if (!read_event_fields(rec, col, ev, error)) {
                add_error(result.errors, result.total_errors, opt, rec.line, error);
                continue;
            }
        } catch (const InputError& e) {
            add_error(result.errors, result.total_errors, opt, rec.line, e.what());
            continue;
        }
        ev.row = row++;
        result.events.push_back(std::move(ev));
    }
    return result;
}

ScoreParseResult parse_score_csv(std::istream& in, const ParseOptions& opt) {
    csv::Reader reader(in);
    csv::Record rec;
    if (!reader.next(rec)) throw InputError("score csv: empty input, header expected");
    auto col = resolve_header(rec, kScoreColumns, "score csv");

    ScoreParseResult result;
    while (reader.next(rec)) {
        if (rec.fields.size() != col.size()) {
            add_error(result.errors, result.total_errors, opt, rec.line,
                      "expected 3 fields, got " + std::to_string(rec.fields.size()));
            continue;
        }
        ScoreRecord sr;
        sr.course_id = rec.fields[col[0]];
        sr.user_id = rec.fields[col[1]];
        if (sr.course_id.empty() || sr.user_id.empty()) {
            add_error(result.errors, result.total_errors, opt, rec.line,
                      "empty CourseID or UserID");
            continue;
        }
        if (!parse_double(rec.fields[col[2]], sr.score)) {
            add_error(result.errors, result.total_errors, opt, rec.line,
                      "non-numeric score \"" + rec.fields[col[2]] + "\"");
            continue;
        }
        if (sr.score < 0.0 || sr.score > 100.0) {
            ++result.dropped_out_of_range;
            continue;
        }
        result.records.push_back(std::move(sr));
    }
    return result;
}

std::vector<ScoredEvent> join_events_scores(std::span<const RawEvent> events,
                                            std::span<const ScoreRecord> scores,
                                            JoinReport& report) {
    report = JoinReport{};
    std::unordered_map<std::string, double> by_key;
    by_key.reserve(scores.size());
    for (const auto& s : scores) {
        std::string key = s.course_id + '\x1f' + s.user_id;
        auto [it, inserted] = by_key.emplace(std::move(key), s.score);
        if (!inserted)
            throw InputError("duplicate score for course \"" + s.course_id +
                             "\", user \"" + s.user_id + "\" (ambiguous grade)");
    }

    std::vector<ScoredEvent> joined;
    joined.reserve(events.size());
    std::unordered_set<std::string> seen_keys;
    for (const auto& ev : events) {
        auto it = by_key.find(ev.course_id + '\x1f' + ev.user_id);
        if (it == by_key.end()) {
            ++report.dropped_events;
            continue;
        }
        seen_keys.insert(it->first);
        ScoredEvent se;
        se.event = ev;
        se.score = it->second;
        se.case_id = CaseId{CaseScope::PerCourse, ev.user_id};
        joined.push_back(std::move(se));
    }
    report.joined_events = joined.size();
    report.unmatched_scores = by_key.size() - seen_keys.size();
    return joined;
}

namespace {

template <typename Event>
std::vector<Event> filter_small_courses(std::vector<Event> events,
                                        std::size_t min_course_events,
                                        FilterReport& report,
                                        const RawEvent& (*raw)(const Event&)) {
    if (min_course_events < 1)
        throw std::invalid_argument("min_course_events must be at least 1");
    report = FilterReport{};

    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& ev : events) ++counts[raw(ev).course_id];

    std::map<std::string, RemovedCourse> removed;
    std::vector<Event> kept;
    kept.reserve(events.size());
    for (auto& ev : events) {
        const RawEvent& r = raw(ev);
        if (counts[r.course_id] < min_course_events) {
            auto& rc = removed[r.course_id];
            rc.course_id = r.course_id;
            rc.course_name = r.course_name;
            ++rc.events_removed;
            ++report.events_removed;
        } else {
            kept.push_back(std::move(ev));
        }
    }
    report.events_kept = kept.size();
    for (auto& [id, rc] : removed) report.removed.push_back(std::move(rc));
    return kept;
}

const RawEvent& raw_of_scored(const ScoredEvent& e) { return e.event; }
const RawEvent& raw_of_raw(const RawEvent& e) { return e; }

}  // namespace

std::vector<ScoredEvent> apply_quality_filters(std::vector<ScoredEvent> events,
                                               std::size_t min_course_events,
                                               FilterReport& report) {
    return filter_small_courses(std::move(events), min_course_events, report,
                                &raw_of_scored);
}

std::vector<RawEvent> apply_quality_filters(std::vector<RawEvent> events,
                                            std::size_t min_course_events,
                                            FilterReport& report) {
    return filter_small_courses(std::move(events), min_course_events, report,
                                &raw_of_raw);
}

void write_event_csv(std::ostream& out, std::span<const RawEvent> events) {
    csv::write_row(out, {"Timestamp", "Course Name", "CourseID", "Event", "Section",
                         "UserID"});
    for (const auto& ev : events) {
        csv::write_row(out, {std::string_view(ev.timestamp.to_log_format()),
                             ev.course_name, ev.course_id, ev.event_name,
                             ev.section ? std::string_view(*ev.section) : std::string_view(),
                             ev.user_id});
    }
}

void write_score_csv(std::ostream& out, std::span<const ScoreRecord> scores) {
    csv::write_row(out, {"CourseID", "UserID", "Score"});
    for (const auto& score : scores) {
        csv::write_row(out, {score.course_id, score.user_id, csv::format_double(score.score)});
    }
}

void write_prepared_csv(std::ostream& out, std::span<const ScoredEvent> events) {
    csv::write_row(out, {"Timestamp", "Course Name", "CourseID", "Event", "Section",
                         "UserID", "Score", "CaseID"});
    for (const auto& se : events) {
        const RawEvent& ev = se.event;
        csv::write_row(out, {std::string_view(ev.timestamp.to_log_format()),
                             ev.course_name, ev.course_id, ev.event_name,
                             ev.section ? std::string_view(*ev.section) : std::string_view(),
                             ev.user_id, csv::format_double(se.score), se.case_id.value});
    }
}

PreparedParseResult parse_prepared_csv(std::istream& in, const ParseOptions& opt) {
    csv::Reader reader(in);
    csv::Record rec;
    if (!reader.next(rec)) throw InputError("prepared csv: empty input, header expected");
    auto col = resolve_header(rec, kPreparedColumns, "prepared csv");

    PreparedParseResult result;
    std::uint64_t row = 0;
    while (reader.next(rec)) {
        if (rec.fields.size() != col.size()) {
            add_error(result.errors, result.total_errors, opt, rec.line,
                      "expected 8 fields, got " + std::to_string(rec.fields.size()));
            continue;
        }
        ScoredEvent se;
        std::string error;
        try {
            if (!read_event_fields(rec, col, se.event, error)) {
                add_error(result.errors, result.total_errors, opt, rec.line, error);
                continue;
            }
        } catch (const InputError& e) {
            add_error(result.errors, result.total_errors, opt, rec.line, e.what());
            continue;
        }
        if (!parse_double(rec.fields[col[6]], se.score)) {
            add_error(result.errors, result.total_errors, opt, rec.line,
                      "non-numeric score \"" + rec.fields[col[6]] + "\"");
            continue;
        }
        se.event.row = row++;
        const std::string& case_value = rec.fields[col[7]];
        // cross-course case ids are "<course>::<user>"; anything else is per-course
        bool cross = case_value == se.event.course_id + "::" + se.event.user_id;
        se.case_id = CaseId{cross ? CaseScope::CrossCourse : CaseScope::PerCourse,
                            case_value.empty() ? se.event.user_id : case_value};
        result.events.push_back(std::move(se));
    }
    return result;
}

}  // namespace flowforge
