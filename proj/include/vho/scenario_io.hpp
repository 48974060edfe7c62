#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "vho/sim.hpp"

namespace vho::io {

// Scenario JSON document; see the bundled data/fig2.json for the shape.
// Malformed JSON or wrong-typed/missing fields raise error{parse_error};
// out-of-range values raise error{scenario_invalid} naming the field.
sim::scenario load_scenario(std::istream& in, const std::string& origin);
sim::scenario load_scenario_file(const std::filesystem::path& path);

// One trace event as a single-line JSON object (no trailing newline).
// Times are emitted in seconds with millisecond precision.
std::string trace_event_line(const sim::trace_event& event);

// JSON-lines trace, one event per line.
void write_trace(std::ostream& out, std::span<const sim::trace_event> trace);
std::string trace_to_string(std::span<const sim::trace_event> trace);

}  // namespace vho::io
