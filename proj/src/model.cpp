#include "flowforge/model.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <unordered_map>

#include "flowforge/errors.hpp"

namespace flowforge {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// days_from_civil).
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yr + (m <= 2));
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

unsigned days_in_month(int y, unsigned m) {
    static constexpr std::array<unsigned, 12> k = {31, 28, 31, 30, 31, 30,
                                                   31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return k[m - 1];
}

[[noreturn]] void bad_timestamp(std::string_view text) {
    throw InputError("malformed timestamp: \"" + std::string(text) + "\"");
}

int parse_digits(std::string_view text, std::string_view s) {
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') bad_timestamp(text);
        v = v * 10 + (c - '0');
    }
    return v;
}

struct CivilTime {
    int year;
    unsigned month, day, hour, minute, second, millis;
};

Timestamp assemble(std::string_view text, const CivilTime& c, int offset_minutes) {
    if (c.month < 1 || c.month > 12) bad_timestamp(text);
    if (c.day < 1 || c.day > days_in_month(c.year, c.month)) bad_timestamp(text);
    if (c.hour > 23 || c.minute > 59 || c.second > 59) bad_timestamp(text);
    if (offset_minutes < -18 * 60 || offset_minutes > 18 * 60) bad_timestamp(text);
    std::int64_t local_s = days_from_civil(c.year, c.month, c.day) * 86400 +
                           c.hour * 3600 + c.minute * 60 + c.second;
    Timestamp ts;
    ts.epoch_ms = (local_s - offset_minutes * 60) * 1000 + c.millis;
    ts.offset_minutes = static_cast<std::int16_t>(offset_minutes);
    return ts;
}

// "YYYY-MM-DD?HH:MM:SS.mmm" where ? is the expected separator.
CivilTime parse_datetime(std::string_view text, std::string_view s, char sep) {
    if (s.size() != 23 || s[4] != '-' || s[7] != '-' || s[10] != sep ||
        s[13] != ':' || s[16] != ':' || s[19] != '.')
        bad_timestamp(text);
    CivilTime c;
    c.year = parse_digits(text, s.substr(0, 4));
    c.month = static_cast<unsigned>(parse_digits(text, s.substr(5, 2)));
    c.day = static_cast<unsigned>(parse_digits(text, s.substr(8, 2)));
    c.hour = static_cast<unsigned>(parse_digits(text, s.substr(11, 2)));
    c.minute = static_cast<unsigned>(parse_digits(text, s.substr(14, 2)));
    c.second = static_cast<unsigned>(parse_digits(text, s.substr(17, 2)));
    c.millis = static_cast<unsigned>(parse_digits(text, s.substr(20, 3)));
    return c;
}

void split_civil(const Timestamp& ts, CivilTime& c) {
    std::int64_t local_ms = ts.epoch_ms + static_cast<std::int64_t>(ts.offset_minutes) * 60000;
    std::int64_t ms = local_ms % 1000;
    std::int64_t s = local_ms / 1000;
    if (ms < 0) {
        ms += 1000;
        s -= 1;
    }
    std::int64_t days = s / 86400;
    std::int64_t sod = s % 86400;
    if (sod < 0) {
        sod += 86400;
        days -= 1;
    }
    civil_from_days(days, c.year, c.month, c.day);
    c.hour = static_cast<unsigned>(sod / 3600);
    c.minute = static_cast<unsigned>((sod / 60) % 60);
    c.second = static_cast<unsigned>(sod % 60);
    c.millis = static_cast<unsigned>(ms);
}

}  // namespace

Timestamp Timestamp::parse_log(std::string_view text) {
    // 2022-08-30 17:25:20.000 +0200
    if (text.size() != 29 || text[23] != ' ') bad_timestamp(text);
    CivilTime c = parse_datetime(text, text.substr(0, 23), ' ');
    char sign = text[24];
    if (sign != '+' && sign != '-') bad_timestamp(text);
    int oh = parse_digits(text, text.substr(25, 2));
    int om = parse_digits(text, text.substr(27, 2));
    if (om > 59) bad_timestamp(text);
    int offset = oh * 60 + om;
    return assemble(text, c, sign == '-' ? -offset : offset);
}

Timestamp Timestamp::parse_iso8601(std::string_view text) {
    // 2022-08-30T17:25:20.000+02:00  or  ...Z
    if (text.size() == 24 && (text[23] == 'Z' || text[23] == 'z')) {
        CivilTime c = parse_datetime(text, text.substr(0, 23), 'T');
        return assemble(text, c, 0);
    }
    if (text.size() != 29 || text[26] != ':') bad_timestamp(text);
    CivilTime c = parse_datetime(text, text.substr(0, 23), 'T');
    char sign = text[23];
    if (sign != '+' && sign != '-') bad_timestamp(text);
    int oh = parse_digits(text, text.substr(24, 2));
    int om = parse_digits(text, text.substr(27, 2));
    if (om > 59) bad_timestamp(text);
    int offset = oh * 60 + om;
    return assemble(text, c, sign == '-' ? -offset : offset);
}

std::string Timestamp::to_log_format() const {
    CivilTime c;
    split_civil(*this, c);
    int off = offset_minutes;
    char sign = off < 0 ? '-' : '+';
    if (off < 0) off = -off;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u %02u:%02u:%02u.%03u %c%02d%02d",
                  c.year, c.month, c.day, c.hour, c.minute, c.second, c.millis,
                  sign, off / 60, off % 60);
    return buf;
}

std::string Timestamp::to_iso8601() const {
    CivilTime c;
    split_civil(*this, c);
    int off = offset_minutes;
    char sign = off < 0 ? '-' : '+';
    if (off < 0) off = -off;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02u:%02u:%02u.%03u%c%02d:%02d",
                  c.year, c.month, c.day, c.hour, c.minute, c.second, c.millis,
                  sign, off / 60, off % 60);
    return buf;
}

std::size_t EventLog::event_count() const {
    std::size_t n = 0;
    for (const auto& t : traces) n += t.events.size();
    return n;
}

EventLog make_event_log(Aggregation aggregation, std::vector<LogRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const LogRow& a, const LogRow& b) {
        if (a.timestamp.epoch_ms != b.timestamp.epoch_ms)
            return a.timestamp.epoch_ms < b.timestamp.epoch_ms;
        return a.row < b.row;
    });

    EventLog log;
    log.aggregation = aggregation;
    std::unordered_map<std::string, std::size_t> trace_index;
    trace_index.reserve(rows.size() / 8 + 1);
    for (auto& r : rows) {
        auto [it, inserted] = trace_index.try_emplace(r.case_id.value, log.traces.size());
        if (inserted) {
            Trace t;
            t.case_id = std::move(r.case_id);
            log.traces.push_back(std::move(t));
        }
        log.traces[it->second].events.push_back(
            TraceEvent{r.timestamp, std::move(r.activity), r.row});
    }
    return log;
}

const char* to_string(Aggregation a) {
    switch (a) {
        case Aggregation::Activity: return "activity";
        case Aggregation::Section: return "section";
        case Aggregation::CrossCourseSection: return "cross-course-section";
    }
    return "activity";
}

std::optional<Aggregation> aggregation_from_string(std::string_view s) {
    if (s == "activity") return Aggregation::Activity;
    if (s == "section") return Aggregation::Section;
    if (s == "cross-course-section") return Aggregation::CrossCourseSection;
    return std::nullopt;
}

}  // namespace flowforge
