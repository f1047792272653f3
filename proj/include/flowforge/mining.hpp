#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flowforge/model.hpp"

namespace flowforge {

// Node in the directly-follows transition system. START and END are
// artificial states framing every trace.
struct Node {
    enum class Kind { Start, End, Activity };

    Kind kind = Kind::Activity;
    std::string label;  // empty for Start/End

    static Node start() { return {Kind::Start, {}}; }
    static Node end() { return {Kind::End, {}}; }
    static Node activity(std::string label) { return {Kind::Activity, std::move(label)}; }

    // Display name; START/END render in caps to stand apart from
    // harmonized section titles.
    std::string name() const;

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
};

using Edge = std::pair<Node, Node>;

// Transition system with per-case occurrence frequencies. counts[i] is
// the number of times case i (in case_ids order) visited the state or
// took the transition; cases that never did contribute an explicit 0.
struct TransitionSystem {
    std::vector<std::string> case_ids;
    std::map<Node, std::vector<std::uint32_t>> states;
    std::map<Edge, std::vector<std::uint32_t>> transitions;

    std::size_t case_count() const { return case_ids.size(); }
    std::uint64_t state_total(const Node& node) const;
    std::uint64_t transition_total(const Edge& edge) const;
};

// Every trace contributes START -> first -> ... -> last -> END, so
// START and END occur exactly once per case. Throws EmptyResultError
// for a log with no traces unless allow_empty.
TransitionSystem build_transition_system(const EventLog& log, bool allow_empty = false);

// Occurrence counts per case (zeros included); throws
// std::out_of_range for an element the system lacks.
std::span<const std::uint32_t> per_case_frequency(const TransitionSystem& system,
                                                  const Node& state);
std::span<const std::uint32_t> per_case_frequency(const TransitionSystem& system,
                                                  const Edge& transition);

struct FilterSummary {
    std::vector<Node> removed_states;
    std::vector<Edge> removed_transitions;  // includes edges dropped with a state
};

// Removes the floor(fraction * n) label states with the lowest total
// occurrence and, independently, the floor(fraction * m) lowest-total
// transitions, then any transition touching a removed state. START/END
// are never removed and do not count toward n. Ties break on (total,
// node/edge order) ascending. fraction must lie in [0, 1).
FilterSummary filter_low_frequency(TransitionSystem& system, double fraction);

}  // namespace flowforge
