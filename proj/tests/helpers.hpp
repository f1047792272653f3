#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "flowforge/model.hpp"

namespace testutil {

inline flowforge::Timestamp ts(int seconds_offset = 0) {
    flowforge::Timestamp t = flowforge::Timestamp::parse_log("2022-08-30 17:25:20.000 +0200");
    t.epoch_ms += static_cast<std::int64_t>(seconds_offset) * 1000;
    return t;
}

// Builds a log from (case id, labels...) with one second between events
// and one hour between trace starts; goes through the standard builder.
inline flowforge::EventLog make_log(
    flowforge::Aggregation aggregation,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& traces) {
    std::vector<flowforge::LogRow> rows;
    std::uint64_t row = 0;
    int trace_index = 0;
    for (const auto& [case_value, labels] : traces) {
        int event_index = 0;
        for (const std::string& label : labels) {
            rows.push_back(flowforge::LogRow{
                flowforge::CaseId{flowforge::CaseScope::PerCourse, case_value},
                ts(trace_index * 3600 + event_index), label, row++});
            ++event_index;
        }
        ++trace_index;
    }
    return flowforge::make_event_log(aggregation, std::move(rows));
}

// mt19937_64 is fully specified by the standard, so fixture streams are
// identical everywhere; distributions are not, hence the modulo draws.
inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path();
        for (int attempt = 0;; ++attempt) {
            path_ = base / (tag + "-" + std::to_string(::getpid()) + "-" +
                            std::to_string(counter_++) + "-" + std::to_string(attempt));
            std::error_code ec;
            if (std::filesystem::create_directory(path_, ec)) break;
        }
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace testutil
