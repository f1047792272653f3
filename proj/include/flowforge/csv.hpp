#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flowforge::csv {

// Comma-separated, double-quote escaping, UTF-8. Unquoted cells are
// trimmed of leading/trailing blanks; quoted cells keep theirs.
struct Record {
    std::vector<std::string> fields;
    std::uint64_t line = 0;  // 1-based line the record starts on
};

// Single-pass reader. Quoted fields may span lines; CR/LF and LF both
// accepted. Throws InputError for a quote left open at end of file.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    // Fills `out` with the next record; returns false at end of input.
    // Blank lines are skipped.
    bool next(Record& out);

private:
    std::istream& in_;
    std::uint64_t line_ = 0;
    std::string buf_;
};

// Quotes only when needed (separator, quote, newline, or edge blanks).
std::string escape_field(std::string_view field);

void write_row(std::ostream& out, std::span<const std::string> fields);
void write_row(std::ostream& out, std::initializer_list<std::string_view> fields);

// Shortest representation that parses back to the same value; "inf",
// "-inf", "nan" spelled out.
std::string format_double(double value);

}  // namespace flowforge::csv
