#include <doctest.h>

#include <sstream>

#include "flowforge/csv.hpp"
#include "flowforge/errors.hpp"

using namespace flowforge;

namespace {

std::vector<csv::Record> read_all(const std::string& text) {
    std::istringstream in(text);
    csv::Reader reader(in);
    std::vector<csv::Record> records;
    csv::Record record;
    while (reader.next(record)) records.push_back(record);
    return records;
}

}  // namespace

TEST_SUITE("csv") {

TEST_CASE("splits and trims unquoted fields") {
    auto records = read_all("a, b ,c\n1,2,3\n");
    REQUIRE(records.size() == 2);
    CHECK(records[0].fields == std::vector<std::string>{"a", "b", "c"});
    CHECK(records[1].fields == std::vector<std::string>{"1", "2", "3"});
    CHECK(records[0].line == 1);
    CHECK(records[1].line == 2);
}

TEST_CASE("quoted fields keep separators and blanks") {
    auto records = read_all("\"a,b\",\" c \",\"say \"\"hi\"\"\"\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].fields == std::vector<std::string>{"a,b", " c ", "say \"hi\""});
}

TEST_CASE("quoted field spans lines") {
    auto records = read_all("\"line1\nline2\",x\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].fields == std::vector<std::string>{"line1\nline2", "x"});
}

TEST_CASE("blank lines are skipped and CRLF is accepted") {
    auto records = read_all("a,b\r\n\r\n\nc,d\r\n");
    REQUIRE(records.size() == 2);
    CHECK(records[0].fields == std::vector<std::string>{"a", "b"});
    CHECK(records[1].fields == std::vector<std::string>{"c", "d"});
    CHECK(records[1].line == 4);
}

TEST_CASE("trailing comma yields an empty final field") {
    auto records = read_all("a,\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].fields == std::vector<std::string>{"a", ""});
}

TEST_CASE("unterminated quote is an input error") {
    CHECK_THROWS_AS(read_all("\"open,b\n"), InputError);
}

TEST_CASE("escape_field round-trips through the reader") {
    const std::vector<std::string> nasty = {"plain", "with,comma", "with\"quote",
                                            "multi\nline", " padded "};
    std::ostringstream out;
    csv::write_row(out, nasty);
    auto records = read_all(out.str());
    REQUIRE(records.size() == 1);
    CHECK(records[0].fields == nasty);
}

TEST_CASE("format_double is shortest round-trip") {
    CHECK(csv::format_double(75) == "75");
    CHECK(csv::format_double(70.6) == "70.6");
    CHECK(csv::format_double(0.1) == "0.1");
    CHECK(csv::format_double(1.0 / 3.0) == "0.3333333333333333");
}

}  // TEST_SUITE
