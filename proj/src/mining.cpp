#include "flowforge/mining.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "flowforge/errors.hpp"

namespace flowforge {

std::string Node::name() const {
    switch (kind) {
        case Kind::Start: return "START";
        case Kind::End: return "END";
        case Kind::Activity: return label;
    }
    return label;
}

std::uint64_t TransitionSystem::state_total(const Node& node) const {
    auto it = states.find(node);
    if (it == states.end()) return 0;
    return std::accumulate(it->second.begin(), it->second.end(), std::uint64_t{0});
}

std::uint64_t TransitionSystem::transition_total(const Edge& edge) const {
    auto it = transitions.find(edge);
    if (it == transitions.end()) return 0;
    return std::accumulate(it->second.begin(), it->second.end(), std::uint64_t{0});
}

TransitionSystem build_transition_system(const EventLog& log, bool allow_empty) {
    if (log.traces.empty() && !allow_empty) {
        throw EmptyResultError("cannot mine a transition system from an empty log");
    }
    TransitionSystem system;
    const std::size_t n = log.traces.size();
    system.case_ids.reserve(n);
    for (const Trace& trace : log.traces) system.case_ids.push_back(trace.case_id.value);

    auto state_counts = [&](const Node& node) -> std::vector<std::uint32_t>& {
        auto [it, inserted] = system.states.try_emplace(node);
        if (inserted) it->second.assign(n, 0);
        return it->second;
    };
    auto transition_counts = [&](const Node& from, const Node& to) -> std::vector<std::uint32_t>& {
        auto [it, inserted] = system.transitions.try_emplace(Edge{from, to});
        if (inserted) it->second.assign(n, 0);
        return it->second;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const Trace& trace = log.traces[i];
        Node previous = Node::start();
        state_counts(previous)[i] += 1;
        for (const TraceEvent& event : trace.events) {
            Node current = Node::activity(event.activity);
            state_counts(current)[i] += 1;
            transition_counts(previous, current)[i] += 1;
            previous = std::move(current);
        }
        state_counts(Node::end())[i] += 1;
        transition_counts(previous, Node::end())[i] += 1;
    }
    return system;
}

std::span<const std::uint32_t> per_case_frequency(const TransitionSystem& system,
                                                  const Node& state) {
    auto it = system.states.find(state);
    if (it == system.states.end()) {
        throw std::out_of_range("no state '" + state.name() + "' in the transition system");
    }
    return it->second;
}

std::span<const std::uint32_t> per_case_frequency(const TransitionSystem& system,
                                                  const Edge& transition) {
    auto it = system.transitions.find(transition);
    if (it == system.transitions.end()) {
        throw std::out_of_range("no transition '" + transition.first.name() + " -> " +
                                transition.second.name() + "' in the transition system");
    }
    return it->second;
}

FilterSummary filter_low_frequency(TransitionSystem& system, double fraction) {
    if (!(fraction >= 0.0 && fraction < 1.0)) {
        throw std::invalid_argument("filter fraction must lie in [0, 1)");
    }
    FilterSummary summary;
    if (fraction == 0.0) return summary;

    std::vector<std::pair<std::uint64_t, Node>> label_states;
    for (const auto& [node, counts] : system.states) {
        if (node.kind != Node::Kind::Activity) continue;
        label_states.emplace_back(system.state_total(node), node);
    }
    std::sort(label_states.begin(), label_states.end());
    const auto state_cut = static_cast<std::size_t>(
        std::floor(fraction * static_cast<double>(label_states.size())));

    std::vector<std::pair<std::uint64_t, Edge>> edges;
    for (const auto& [edge, counts] : system.transitions) {
        edges.emplace_back(system.transition_total(edge), edge);
    }
    std::sort(edges.begin(), edges.end());
    const auto edge_cut =
        static_cast<std::size_t>(std::floor(fraction * static_cast<double>(edges.size())));

    std::set<Node> removed_states;
    for (std::size_t i = 0; i < state_cut; ++i) removed_states.insert(label_states[i].second);

    std::set<Edge> removed_edges;
    for (std::size_t i = 0; i < edge_cut; ++i) removed_edges.insert(edges[i].second);
    for (const auto& [total, edge] : edges) {
        if (removed_states.count(edge.first) || removed_states.count(edge.second)) {
            removed_edges.insert(edge);
        }
    }

    for (const Node& node : removed_states) {
        system.states.erase(node);
        summary.removed_states.push_back(node);
    }
    for (const Edge& edge : removed_edges) {
        system.transitions.erase(edge);
        summary.removed_transitions.push_back(edge);
    }
    return summary;
}

}  // namespace flowforge
