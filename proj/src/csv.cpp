#include "flowforge/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "flowforge/errors.hpp"

namespace flowforge::csv {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

// Splits one logical record (newlines inside quotes already restored by
// the caller) into trimmed/unquoted fields.
void split_record(const std::string& raw, std::vector<std::string>& fields) {
    fields.clear();
    std::size_t i = 0;
    const std::size_t n = raw.size();
    while (true) {
        while (i < n && is_blank(raw[i])) ++i;
        std::string field;
        if (i < n && raw[i] == '"') {
            ++i;
            while (i < n) {
                if (raw[i] == '"') {
                    if (i + 1 < n && raw[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                    } else {
                        ++i;
                        break;
                    }
                } else {
                    field.push_back(raw[i++]);
                }
            }
            while (i < n && is_blank(raw[i])) ++i;
        } else {
            std::size_t start = i;
            while (i < n && raw[i] != ',') ++i;
            std::size_t end = i;
            while (end > start && is_blank(raw[end - 1])) --end;
            field.assign(raw, start, end - start);
        }
        fields.push_back(std::move(field));
        if (i >= n) break;
        if (raw[i] == ',') {
            ++i;
            if (i == n) {  // trailing comma means a final empty field
                fields.emplace_back();
                break;
            }
        } else {
            // stray text after a closing quote; keep scanning to the comma
            std::size_t start = i;
            while (i < n && raw[i] != ',') ++i;
            fields.back().append(raw, start, i - start);
            if (i >= n) break;
            ++i;
            if (i == n) {
                fields.emplace_back();
                break;
            }
        }
    }
}

bool quotes_balanced(const std::string& s) {
    bool in_quote = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!in_quote) {
            // a quote only opens a field right after start, comma, or blanks
            if (s[i] == '"') {
                std::size_t j = i;
                while (j > 0 && is_blank(s[j - 1])) --j;
                if (j == 0 || s[j - 1] == ',') in_quote = true;
            }
        } else if (s[i] == '"') {
            if (i + 1 < s.size() && s[i + 1] == '"') {
                ++i;
            } else {
                in_quote = false;
            }
        }
    }
    return !in_quote;
}

}  // namespace

bool Reader::next(Record& out) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        buf_ = line;
        std::uint64_t start_line = line_;
        while (!quotes_balanced(buf_)) {
            std::string more;
            if (!std::getline(in_, more))
                throw InputError("line " + std::to_string(start_line) +
                                 ": unterminated quoted field");
            ++line_;
            if (!more.empty() && more.back() == '\r') more.pop_back();
            buf_.push_back('\n');
            buf_ += more;
        }
        out.line = start_line;
        split_record(buf_, out.fields);
        return true;
    }
    return false;
}

std::string escape_field(std::string_view field) {
    bool needs_quotes = false;
    if (!field.empty() && (is_blank(field.front()) || is_blank(field.back())))
        needs_quotes = true;
    for (char c : field) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') {
            needs_quotes = true;
            break;
        }
    }
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream& out, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(',');
        out << escape_field(fields[i]);
    }
    out.put('\n');
}

void write_row(std::ostream& out, std::initializer_list<std::string_view> fields) {
    bool first = true;
    for (auto f : fields) {
        if (!first) out.put(',');
        first = false;
        out << escape_field(f);
    }
    out.put('\n');
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

}  // namespace flowforge::csv
