#pragma once

#include <iosfwd>
#include <map>
#include <regex>
#include <span>
#include <string>
#include <vector>

#include "flowforge/model.hpp"

namespace flowforge {

// One whole-string rewrite. The pattern is matched case-insensitively
// against the full section title; the replacement may reference capture
// groups as $1..$9.
struct HarmonizationRule {
    std::string pattern;
    std::string replacement;
    std::regex compiled;
};

// Ordered: the first matching rule wins.
class RuleTable {
public:
    RuleTable() = default;

    // Throws InputError if the pattern does not compile or the
    // replacement references a capture group the pattern lacks.
    void add(std::string pattern, std::string replacement);

    // First-match-wins rewrite; returns the input unchanged when no rule
    // matches.
    std::string apply(const std::string& title) const;

    std::size_t size() const { return rules_.size(); }
    const std::vector<HarmonizationRule>& rules() const { return rules_; }

private:
    std::vector<HarmonizationRule> rules_;
};

// The built-in table standardizing section titles to "class 1".."class 9"
// and "self study 1".."self study 9". Digit rules cover "class",
// "self-study"/"self study"/"eigenstudium", and "präsenz" followed by a
// single digit 1-9 (two-digit numbers are left alone); letter rules map
// the self-study variants with letters a-i onto self study 1-9.
const RuleTable& default_rule_table();

// Rule file: one rule per line, pattern TAB replacement, UTF-8.
// Blank lines and lines starting with '#' are skipped.
RuleTable load_rule_table(std::istream& in);

// Standardized title -> number of distinct original titles collapsed
// into it (identity rewrites such as "class 1" -> "class 1" count too).
using ReplacementReport = std::map<std::string, std::size_t>;

// Rewrites each event's section by the first matching rule. Events
// without a section pass through uncounted.
ReplacementReport harmonize_sections(std::vector<ScoredEvent>& events,
                                     const RuleTable& rules);

// True for "class 1".."class 9" and "self study 1".."self study 9".
bool is_standardized_section(std::string_view title);

// Keeps exactly the events whose section already conforms to the
// standardized schema.
std::vector<ScoredEvent> filter_standardized(std::vector<ScoredEvent> events);

// Drops an event when the previous retained event of the same case has
// the same label; the first event of a trace always stays. Only defined
// for section-level logs.
EventLog remove_self_loops(const EventLog& log);

// Same rule on pre-projection rows: a row goes when the previous kept
// row of the same (course, user) in time order has the same section.
// Rows without a section are never removed and never match a neighbor.
std::vector<ScoredEvent> remove_self_loops(std::vector<ScoredEvent> events);

}  // namespace flowforge
