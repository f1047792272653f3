#include "flowforge/harmonize.hpp"

#include <algorithm>
#include <istream>
#include <unordered_map>

#include "flowforge/errors.hpp"

namespace flowforge {

namespace {

// Highest capture group referenced as $N in a replacement template.
std::size_t max_group_reference(const std::string& replacement) {
    std::size_t max_ref = 0;
    for (std::size_t i = 0; i + 1 < replacement.size(); ++i) {
        if (replacement[i] != '$') continue;
        char c = replacement[i + 1];
        if (c == '$') {
            ++i;
            continue;
        }
        std::size_t n = 0;
        std::size_t j = i + 1;
        while (j < replacement.size() && replacement[j] >= '0' && replacement[j] <= '9') {
            n = n * 10 + static_cast<std::size_t>(replacement[j] - '0');
            ++j;
        }
        max_ref = std::max(max_ref, n);
        i = j - 1;
    }
    return max_ref;
}

}  // namespace

void RuleTable::add(std::string pattern, std::string replacement) {
    HarmonizationRule rule;
    rule.pattern = std::move(pattern);
    rule.replacement = std::move(replacement);
    try {
        rule.compiled.assign(rule.pattern,
                             std::regex::ECMAScript | std::regex::icase);
    } catch (const std::regex_error& e) {
        throw InputError("harmonization pattern \"" + rule.pattern +
                         "\" does not compile: " + e.what());
    }
    if (max_group_reference(rule.replacement) > rule.compiled.mark_count())
        throw InputError("replacement \"" + rule.replacement +
                         "\" references a capture group \"" + rule.pattern +
                         "\" does not have");
    rules_.push_back(std::move(rule));
}

std::string RuleTable::apply(const std::string& title) const {
    std::smatch m;
    for (const auto& rule : rules_) {
        if (std::regex_match(title, m, rule.compiled))
            return m.format(rule.replacement);
    }
    return title;
}

const RuleTable& default_rule_table() {
    static const RuleTable table = [] {
        RuleTable t;
        // ([1-9])(?!\d) keeps "class 10" and friends out of "class 1";
        // they fall through unmatched and the schema filter drops them.
        t.add(R"((.*)(class) ([1-9])(?!\d)(.*))", "class $3");
        t.add(R"((.*)(self-study|self study|eigenstudium) ([1-9])(?!\d)(.*))",
              "self study $3");
        t.add(R"((.*)(präsenz) ([1-9])(?!\d)(.*))", "class $3");
        const char* letters = "abcdefghi";
        for (int i = 0; i < 9; ++i) {
            std::string pattern = R"((.*)(eigenstudium|self study|self-study) ()";
            pattern += letters[i];
            pattern += ")(.*)";
            t.add(std::move(pattern), "self study " + std::to_string(i + 1));
        }
        return t;
    }();
    return table;
}

RuleTable load_rule_table(std::istream& in) {
    RuleTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw InputError("rule file line " + std::to_string(line_no) +
                             ": expected pattern<TAB>replacement");
        table.add(line.substr(0, tab), line.substr(tab + 1));
    }
    return table;
}

ReplacementReport harmonize_sections(std::vector<ScoredEvent>& events,
                                     const RuleTable& rules) {
    // Titles repeat heavily, so rewrite each distinct title once.
    std::unordered_map<std::string, std::string> rewritten;
    for (auto& ev : events) {
        if (!ev.event.section) continue;
        auto it = rewritten.find(*ev.event.section);
        if (it == rewritten.end())
            it = rewritten.emplace(*ev.event.section, rules.apply(*ev.event.section)).first;
        if (it->second != *ev.event.section) ev.event.section = it->second;
    }

    ReplacementReport report;
    for (const auto& [original, result] : rewritten) {
        // only count titles an explicit rule rewrote (incl. identity rewrites)
        std::smatch m;
        for (const auto& rule : rules.rules()) {
            if (std::regex_match(original, m, rule.compiled)) {
                ++report[result];
                break;
            }
        }
    }
    return report;
}

bool is_standardized_section(std::string_view title) {
    std::string_view rest;
    if (title.starts_with("class ")) {
        rest = title.substr(6);
    } else if (title.starts_with("self study ")) {
        rest = title.substr(11);
    } else {
        return false;
    }
    return rest.size() == 1 && rest[0] >= '1' && rest[0] <= '9';
}

std::vector<ScoredEvent> filter_standardized(std::vector<ScoredEvent> events) {
    std::erase_if(events, [](const ScoredEvent& ev) {
        return !ev.event.section || !is_standardized_section(*ev.event.section);
    });
    return events;
}

EventLog remove_self_loops(const EventLog& log) {
    if (log.aggregation == Aggregation::Activity)
        throw std::invalid_argument(
            "self-loop removal is defined for section-level logs only");
    EventLog out;
    out.aggregation = log.aggregation;
    out.traces.reserve(log.traces.size());
    for (const auto& trace : log.traces) {
        Trace t;
        t.case_id = trace.case_id;
        for (const auto& ev : trace.events) {
            if (t.events.empty() || t.events.back().activity != ev.activity)
                t.events.push_back(ev);
        }
        out.traces.push_back(std::move(t));
    }
    return out;
}

std::vector<ScoredEvent> remove_self_loops(std::vector<ScoredEvent> events) {
    // Index by (course, user), visit each case in time order, mark drops.
    std::unordered_map<std::string, std::vector<std::size_t>> by_case;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const RawEvent& ev = events[i].event;
        by_case[ev.course_id + '\x1f' + ev.user_id].push_back(i);
    }

    std::vector<bool> drop(events.size(), false);
    for (auto& [key, index] : by_case) {
        std::sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
            const RawEvent& ea = events[a].event;
            const RawEvent& eb = events[b].event;
            if (ea.timestamp.epoch_ms != eb.timestamp.epoch_ms)
                return ea.timestamp.epoch_ms < eb.timestamp.epoch_ms;
            return ea.row < eb.row;
        });
        const std::optional<std::string>* prev = nullptr;
        for (std::size_t i : index) {
            const auto& section = events[i].event.section;
            if (prev && section && *prev && **prev == *section) {
                drop[i] = true;
                continue;  // a dropped event does not become the new "previous"
            }
            prev = &section;
        }
    }

    std::vector<ScoredEvent> kept;
    kept.reserve(events.size());
    for (std::size_t i = 0; i < events.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(events[i]));
    return kept;
}

}  // namespace flowforge
