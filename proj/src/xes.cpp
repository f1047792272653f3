#include "flowforge/xes.hpp"

#include <cctype>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flowforge/errors.hpp"

namespace flowforge {
namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string xml_unescape(std::string_view s, std::size_t line_hint) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out += s[i++];
            continue;
        }
        std::size_t semi = s.find(';', i);
        if (semi == std::string_view::npos) {
            throw InputError("xes: unterminated entity near byte " + std::to_string(line_hint + i));
        }
        std::string_view ent = s.substr(i + 1, semi - i - 1);
        if (ent == "amp") out += '&';
        else if (ent == "lt") out += '<';
        else if (ent == "gt") out += '>';
        else if (ent == "quot") out += '"';
        else if (ent == "apos") out += '\'';
        else if (!ent.empty() && ent[0] == '#') {
            int code = 0;
            if (ent.size() > 2 && (ent[1] == 'x' || ent[1] == 'X')) {
                for (std::size_t k = 2; k < ent.size(); ++k) {
                    char c = ent[k];
                    int d;
                    if (c >= '0' && c <= '9') d = c - '0';
                    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
                    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
                    else throw InputError("xes: bad character reference &" + std::string(ent) + ";");
                    code = code * 16 + d;
                }
            } else {
                for (std::size_t k = 1; k < ent.size(); ++k) {
                    char c = ent[k];
                    if (c < '0' || c > '9') {
                        throw InputError("xes: bad character reference &" + std::string(ent) + ";");
                    }
                    code = code * 10 + (c - '0');
                }
            }
            if (code <= 0 || code > 0x10FFFF) {
                throw InputError("xes: character reference out of range");
            }
            // UTF-8 encode.
            if (code < 0x80) {
                out += static_cast<char>(code);
            } else if (code < 0x800) {
                out += static_cast<char>(0xC0 | (code >> 6));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else if (code < 0x10000) {
                out += static_cast<char>(0xE0 | (code >> 12));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else {
                out += static_cast<char>(0xF0 | (code >> 18));
                out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            }
        } else {
            throw InputError("xes: unknown entity &" + std::string(ent) + ";");
        }
        i = semi + 1;
    }
    return out;
}

// ---- reader -------------------------------------------------------------

struct Tag {
    std::string name;
    std::unordered_map<std::string, std::string> attrs;
    bool closing = false;       // </name>
    bool self_closing = false;  // <name ... />
    std::size_t pos = 0;        // byte offset of '<'
};

class TagScanner {
  public:
    explicit TagScanner(std::string text) : text_(std::move(text)) {}

    // Returns the next tag, skipping text nodes, comments, PIs and the
    // XML declaration. nullopt at end of input.
    std::optional<Tag> next() {
        for (;;) {
            std::size_t lt = text_.find('<', pos_);
            if (lt == std::string::npos) return std::nullopt;
            if (text_.compare(lt, 4, "<!--") == 0) {
                std::size_t end = text_.find("-->", lt + 4);
                if (end == std::string::npos) throw InputError("xes: unterminated comment");
                pos_ = end + 3;
                continue;
            }
            if (text_.compare(lt, 2, "<?") == 0) {
                std::size_t end = text_.find("?>", lt + 2);
                if (end == std::string::npos) throw InputError("xes: unterminated processing instruction");
                pos_ = end + 2;
                continue;
            }
            if (text_.compare(lt, 2, "<!") == 0) {
                std::size_t end = text_.find('>', lt + 2);
                if (end == std::string::npos) throw InputError("xes: unterminated declaration");
                pos_ = end + 1;
                continue;
            }
            std::size_t gt = find_tag_end(lt);
            Tag tag = parse_tag(text_, lt, gt);
            pos_ = gt + 1;
            return tag;
        }
    }

  private:
    // '>' inside a quoted attribute value must not end the tag.
    std::size_t find_tag_end(std::size_t lt) const {
        char quote = 0;
        for (std::size_t i = lt + 1; i < text_.size(); ++i) {
            char c = text_[i];
            if (quote != 0) {
                if (c == quote) quote = 0;
            } else if (c == '"' || c == '\'') {
                quote = c;
            } else if (c == '>') {
                return i;
            }
        }
        throw InputError("xes: unterminated tag near byte " + std::to_string(lt));
    }

    static Tag parse_tag(const std::string& text, std::size_t lt, std::size_t gt) {
        Tag tag;
        tag.pos = lt;
        std::size_t i = lt + 1;
        if (i < gt && text[i] == '/') {
            tag.closing = true;
            ++i;
        }
        std::size_t name_start = i;
        while (i < gt && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '/') ++i;
        tag.name = text.substr(name_start, i - name_start);
        if (tag.name.empty()) throw InputError("xes: empty tag name near byte " + std::to_string(lt));
        while (i < gt) {
            while (i < gt && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= gt) break;
            if (text[i] == '/') {
                tag.self_closing = true;
                ++i;
                continue;
            }
            std::size_t key_start = i;
            while (i < gt && text[i] != '=' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            std::string key = text.substr(key_start, i - key_start);
            while (i < gt && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= gt || text[i] != '=') {
                throw InputError("xes: attribute '" + key + "' without value near byte " + std::to_string(lt));
            }
            ++i;
            while (i < gt && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= gt || (text[i] != '"' && text[i] != '\'')) {
                throw InputError("xes: unquoted attribute value near byte " + std::to_string(lt));
            }
            char quote = text[i++];
            std::size_t val_start = i;
            while (i < gt && text[i] != quote) ++i;
            if (i >= gt) throw InputError("xes: unterminated attribute value near byte " + std::to_string(lt));
            tag.attrs[key] = xml_unescape(std::string_view(text).substr(val_start, i - val_start), val_start);
            ++i;
        }
        return tag;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

const std::string* attr(const Tag& tag, const char* key) {
    auto it = tag.attrs.find(key);
    return it == tag.attrs.end() ? nullptr : &it->second;
}

// Consumes children of a string/date attribute element until its close
// tag (attributes may in principle nest per the standard; we ignore the
// nested ones).
void skip_subtree(TagScanner& scanner, const std::string& name) {
    int depth = 1;
    while (depth > 0) {
        auto tag = scanner.next();
        if (!tag) throw InputError("xes: missing </" + name + ">");
        if (tag->closing) {
            --depth;
            if (depth == 0 && tag->name != name) {
                throw InputError("xes: expected </" + name + ">, found </" + tag->name + ">");
            }
        } else if (!tag->self_closing) {
            ++depth;
        }
    }
}

}  // namespace

void write_xes(const EventLog& log, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<log xes.version=\"1.0\" xes.features=\"\">\n";
    out << "\t<extension name=\"Concept\" prefix=\"concept\" "
           "uri=\"http://www.xes-standard.org/concept.xesext\"/>\n";
    out << "\t<extension name=\"Time\" prefix=\"time\" "
           "uri=\"http://www.xes-standard.org/time.xesext\"/>\n";
    out << "\t<string key=\"concept:name\" value=\"" << xml_escape(to_string(log.aggregation))
        << "\"/>\n";
    for (const Trace& trace : log.traces) {
        out << "\t<trace>\n";
        out << "\t\t<string key=\"concept:name\" value=\"" << xml_escape(trace.case_id.value)
            << "\"/>\n";
        for (const TraceEvent& event : trace.events) {
            out << "\t\t<event>\n";
            out << "\t\t\t<string key=\"concept:name\" value=\"" << xml_escape(event.activity)
                << "\"/>\n";
            out << "\t\t\t<date key=\"time:timestamp\" value=\"" << event.timestamp.to_iso8601()
                << "\"/>\n";
            out << "\t\t</event>\n";
        }
        out << "\t</trace>\n";
    }
    out << "</log>\n";
}

EventLog read_xes(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    TagScanner scanner(std::move(buffer).str());

    auto root = scanner.next();
    if (!root || root->name != "log" || root->closing) {
        throw InputError("xes: expected <log> root element");
    }
    if (root->self_closing) throw InputError("xes: empty <log>");

    std::optional<Aggregation> aggregation;
    std::vector<LogRow> rows;
    std::uint64_t row_counter = 0;
    std::size_t trace_index = 0;
    bool in_trace = false;
    bool in_event = false;
    std::size_t event_index = 0;
    std::optional<std::string> trace_name;
    std::optional<std::string> event_name;
    std::optional<Timestamp> event_time;
    // Events buffer until </trace> so a concept:name anywhere in the
    // trace still applies. Case ids register in trace order; duplicate
    // names merge and empty traces are skipped.
    std::vector<std::pair<Timestamp, std::string>> pending;
    std::vector<std::string> case_order;
    std::unordered_map<std::string, std::size_t> case_seen;

    // 1-based positions for error messages
    auto context = [&]() {
        std::string where = "trace " + std::to_string(trace_index + 1);
        if (in_event) where += ", event " + std::to_string(event_index + 1);
        return where;
    };

    for (;;) {
        auto tag = scanner.next();
        if (!tag) throw InputError("xes: missing </log>");

        if (tag->closing) {
            if (tag->name == "event") {
                if (!in_event) throw InputError("xes: stray </event>");
                if (!event_name) {
                    throw InputError("xes: event missing concept:name (" + context() + ")");
                }
                if (!event_time) {
                    throw InputError("xes: event missing time:timestamp (" + context() + ")");
                }
                pending.emplace_back(*event_time, std::move(*event_name));
                in_event = false;
                ++event_index;
            } else if (tag->name == "trace") {
                if (!in_trace || in_event) throw InputError("xes: stray </trace>");
                if (!pending.empty()) {
                    std::string case_value =
                        trace_name ? *trace_name : "trace " + std::to_string(trace_index);
                    if (!case_seen.count(case_value)) {
                        case_seen.emplace(case_value, case_order.size());
                        case_order.push_back(case_value);
                    }
                    for (auto& [when, what] : pending) {
                        rows.push_back(LogRow{CaseId{CaseScope::PerCourse, case_value}, when,
                                              std::move(what), row_counter++});
                    }
                    pending.clear();
                }
                in_trace = false;
                ++trace_index;
            } else if (tag->name == "log") {
                if (in_trace) throw InputError("xes: <trace> not closed before </log>");
                break;
            } else {
                throw InputError("xes: unexpected </" + tag->name + ">");
            }
            continue;
        }

        if (tag->name == "trace") {
            if (in_trace) throw InputError("xes: nested <trace> (" + context() + ")");
            if (tag->self_closing) {
                ++trace_index;
                continue;
            }
            in_trace = true;
            event_index = 0;
            trace_name.reset();
            pending.clear();
            continue;
        }
        if (tag->name == "event") {
            if (!in_trace) throw InputError("xes: <event> outside <trace>");
            if (in_event) throw InputError("xes: nested <event> (" + context() + ")");
            if (tag->self_closing) {
                throw InputError("xes: event missing concept:name (" + context() + ")");
            }
            in_event = true;
            event_name.reset();
            event_time.reset();
            continue;
        }
        if (tag->name == "extension" || tag->name == "classifier" || tag->name == "global") {
            if (!tag->self_closing) skip_subtree(scanner, tag->name);
            continue;
        }
        if (tag->name == "string" || tag->name == "date" || tag->name == "int" ||
            tag->name == "float" || tag->name == "boolean" || tag->name == "id" ||
            tag->name == "list" || tag->name == "container") {
            const std::string* key = attr(*tag, "key");
            const std::string* value = attr(*tag, "value");
            if (in_event) {
                if (key && *key == "concept:name" && tag->name == "string") {
                    if (!value) throw InputError("xes: concept:name without value (" + context() + ")");
                    event_name = *value;
                } else if (key && *key == "time:timestamp" && tag->name == "date") {
                    if (!value) throw InputError("xes: time:timestamp without value (" + context() + ")");
                    try {
                        event_time = Timestamp::parse_iso8601(*value);
                    } catch (const std::exception& e) {
                        throw InputError("xes: bad time:timestamp '" + *value + "' (" + context() +
                                         "): " + e.what());
                    }
                }
            } else if (in_trace) {
                if (key && *key == "concept:name" && tag->name == "string") {
                    if (!value) throw InputError("xes: trace concept:name without value (" + context() + ")");
                    trace_name = *value;
                }
            } else {
                if (key && *key == "concept:name" && tag->name == "string" && value) {
                    aggregation = aggregation_from_string(*value);
                    if (!aggregation) {
                        throw InputError("xes: unknown aggregation level '" + *value + "'");
                    }
                }
            }
            if (!tag->self_closing) skip_subtree(scanner, tag->name);
            continue;
        }
        throw InputError("xes: unexpected <" + tag->name + "> (" + context() + ")");
    }

    EventLog log = make_event_log(aggregation.value_or(Aggregation::Activity), std::move(rows));
    // make_event_log orders traces by first event; re-order to the
    // document's trace order so write/read round-trips exactly.
    std::unordered_map<std::string, std::size_t> rank;
    rank.reserve(case_seen.size());
    for (std::size_t i = 0; i < case_order.size(); ++i) rank.emplace(case_order[i], i);
    std::vector<Trace> ordered(case_order.size());
    for (Trace& trace : log.traces) {
        ordered[rank.at(trace.case_id.value)] = std::move(trace);
    }
    log.traces = std::move(ordered);
    return log;
}

}  // namespace flowforge
