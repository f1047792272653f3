#include "flowforge/compare.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowforge/csv.hpp"
#include "flowforge/errors.hpp"
#include "flowforge/parallel.hpp"

namespace flowforge {
namespace {

ElementComparison compare_element(std::span<const std::uint32_t> counts, std::size_t n_a,
                                  std::size_t min_group_cases, double alpha_effective) {
    ElementComparison out;
    std::vector<double> a(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(n_a));
    std::vector<double> b(counts.begin() + static_cast<std::ptrdiff_t>(n_a), counts.end());
    for (std::size_t i = 0; i < n_a; ++i) out.support_a += counts[i] > 0;
    for (std::size_t i = n_a; i < counts.size(); ++i) out.support_b += counts[i] > 0;

    MeanVariance mv_a = mean_and_sample_variance(a);
    MeanVariance mv_b = mean_and_sample_variance(b);
    out.mean_a = mv_a.mean;
    out.mean_b = mv_b.mean;
    out.welch = welch_t_test(a, b);
    out.low_support = out.support_a < min_group_cases && out.support_b < min_group_cases;
    out.significant =
        !out.low_support && out.welch.p <= alpha_effective && out.mean_a != out.mean_b;
    if (out.significant) {
        out.direction = out.mean_a > out.mean_b ? Direction::MoreInA : Direction::MoreInB;
    }
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string element_label(const std::string& name, const ElementComparison& cmp) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.2f | %.2f\\np=%.3g", cmp.mean_a, cmp.mean_b, cmp.welch.p);
    if (name.empty()) return buf;
    return name + "\\n" + buf;
}

const char* direction_word(Direction d) {
    switch (d) {
        case Direction::MoreInA: return "more_in_a";
        case Direction::MoreInB: return "more_in_b";
        case Direction::None: return "none";
    }
    return "none";
}

}  // namespace

ComparisonResult compare_groups(const EventLog& group_a, const EventLog& group_b,
                                const ComparisonConfig& config) {
    if (group_a.aggregation != group_b.aggregation) {
        throw InputError(std::string("cannot compare logs aggregated differently (") +
                         to_string(group_a.aggregation) + " vs " + to_string(group_b.aggregation) +
                         ")");
    }
    const std::size_t need = std::max<std::size_t>(2, config.min_group_cases);
    if (group_a.traces.size() < need || group_b.traces.size() < need) {
        throw InputError("each group needs at least " + std::to_string(need) +
                         " cases (got " + std::to_string(group_a.traces.size()) + " and " +
                         std::to_string(group_b.traces.size()) + ")");
    }

    // Pool the traces so every element gets a full-length occurrence
    // vector over both groups; a case id may legitimately appear in
    // both logs, so the split is positional, not by id.
    EventLog pooled;
    pooled.aggregation = group_a.aggregation;
    pooled.traces.reserve(group_a.traces.size() + group_b.traces.size());
    pooled.traces.insert(pooled.traces.end(), group_a.traces.begin(), group_a.traces.end());
    pooled.traces.insert(pooled.traces.end(), group_b.traces.begin(), group_b.traces.end());
    TransitionSystem system = build_transition_system(pooled);

    ComparisonResult result;
    result.aggregation = pooled.aggregation;
    result.cases_a = group_a.traces.size();
    result.cases_b = group_b.traces.size();
    if (config.filter_fraction > 0.0) {
        result.filter = filter_low_frequency(system, config.filter_fraction);
    }

    const std::size_t element_count = system.states.size() + system.transitions.size();
    result.alpha_effective = config.bonferroni && element_count > 0
                                 ? config.alpha / static_cast<double>(element_count)
                                 : config.alpha;

    std::vector<const std::vector<std::uint32_t>*> vectors;
    vectors.reserve(element_count);
    for (const auto& [node, counts] : system.states) vectors.push_back(&counts);
    for (const auto& [edge, counts] : system.transitions) vectors.push_back(&counts);

    std::vector<ElementComparison> computed(vectors.size());
    parallel_for(
        vectors.size(),
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                computed[i] = compare_element(*vectors[i], result.cases_a, config.min_group_cases,
                                              result.alpha_effective);
            }
        },
        64);

    std::size_t i = 0;
    for (const auto& [node, counts] : system.states) result.states.emplace(node, computed[i++]);
    for (const auto& [edge, counts] : system.transitions) {
        result.transitions.emplace(edge, computed[i++]);
    }
    return result;
}

void export_dot(const ComparisonResult& result, std::ostream& out) {
    out << "digraph comparison {\n";
    out << "\trankdir=TB;\n";
    out << "\tnode [shape=box, style=filled, fontname=\"Helvetica\"];\n";

    std::unordered_map<std::string, std::string> ids;
    ids.reserve(result.states.size());
    std::size_t next = 0;
    for (const auto& [node, cmp] : result.states) {
        std::string id = "n" + std::to_string(next++);
        ids.emplace(node.name(), id);
        const char* fill = "lightgray";
        if (cmp.significant) {
            fill = cmp.direction == Direction::MoreInA ? "lightblue" : "lightcoral";
        }
        out << '\t' << id << " [label=" << dot_quote(element_label(node.name(), cmp))
            << ", fillcolor=" << fill << "];\n";
    }
    for (const auto& [edge, cmp] : result.transitions) {
        auto from = ids.find(edge.first.name());
        auto to = ids.find(edge.second.name());
        if (from == ids.end() || to == ids.end()) continue;  // endpoint filtered out
        const char* color = "gray";
        if (cmp.significant) {
            color = cmp.direction == Direction::MoreInA ? "blue" : "red";
        }
        out << '\t' << from->second << " -> " << to->second
            << " [label=" << dot_quote(element_label({}, cmp)) << ", color=" << color
            << ", fontcolor=" << color << "];\n";
    }
    out << "}\n";
}

void write_comparison_csv(const ComparisonResult& result, std::ostream& out) {
    csv::write_row(out,
                   {"element", "kind", "mean_a", "mean_b", "t", "df", "p", "significant",
                    "direction"});
    auto emit = [&](const std::string& element, const char* kind, const ElementComparison& cmp) {
        csv::write_row(out, {element, kind, csv::format_double(cmp.mean_a),
                             csv::format_double(cmp.mean_b), csv::format_double(cmp.welch.t),
                             csv::format_double(cmp.welch.df), csv::format_double(cmp.welch.p),
                             cmp.significant ? "true" : "false", direction_word(cmp.direction)});
    };
    for (const auto& [node, cmp] : result.states) emit(node.name(), "state", cmp);
    for (const auto& [edge, cmp] : result.transitions) {
        emit(edge.first.name() + " -> " + edge.second.name(), "transition", cmp);
    }
}

}  // namespace flowforge
