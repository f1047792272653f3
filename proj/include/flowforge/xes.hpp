#pragma once

#include <iosfwd>

#include "flowforge/model.hpp"

namespace flowforge {

// Minimal XES profile: one <log> with concept and time extension
// declarations, a log-level concept:name recording the aggregation
// level, one <trace> per case (concept:name = case id) and one <event>
// per event (concept:name = activity, time:timestamp = ISO-8601 with
// milliseconds and offset). Traces appear in log order, events in time
// order.
void write_xes(const EventLog& log, std::ostream& out);

// Accepts documents produced by write_xes or structurally equivalent
// ones. Traces with the same concept:name merge into one case; events
// are re-sorted through the standard log builder. An event missing
// concept:name or time:timestamp is an error naming trace and event.
EventLog read_xes(std::istream& in);

}  // namespace flowforge
