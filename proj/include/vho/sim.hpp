#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vho/schemes.hpp"

namespace vho::sim {

struct vec2 {
  double x = 0.0;
  double y = 0.0;
};

double distance(vec2 a, vec2 b);

// Circular coverage area of one candidate network.
struct cell {
  selection::candidate_network network;
  vec2 center;
  double radius = 0.0;  // meters
};

struct scenario {
  std::vector<cell> cells;
  selection::qos_vector mt_required;
  selection::weight_profile profile = selection::voice_profile();
  std::vector<vec2> waypoints;  // piecewise-linear trajectory, meters
  double speed_mps = 1.0;
  double tick_s = 1.0;
  schemes::scheme decision_scheme = schemes::scheme::dvhd;
  selection::method decision_method = selection::method::saw;
  schemes::delay_params delays;
  trust::trust_params trust;
  double hysteresis = 0.9;  // fraction of radius that triggers a handover
  std::uint64_t seed = 0;   // reserved for optional QoS perturbation
};

// Throws error{scenario_invalid} naming the offending field.
void validate(const scenario& s);

enum class event_kind {
  coverage_change,
  handover_triggered,
  decision_made,
  connected,
  handover_blocked,
  trust_updated,
};

const char* event_kind_name(event_kind k);

struct coverage_payload {
  std::vector<std::string> covering;  // empty while out of coverage
};
struct trigger_payload {
  std::string serving;
  std::vector<std::string> covering;
};
struct decision_payload {
  schemes::decision_outcome outcome;
};
struct connected_payload {
  std::string network;
};
struct blocked_payload {
  std::vector<std::string> tested;
};
struct trust_payload {
  std::string network;
  double lot_before = 0.0;
  double lot_after = 0.0;
  bool violation = false;
};

struct trace_event {
  double time_s = 0.0;
  event_kind kind = event_kind::coverage_change;
  vec2 position;
  std::variant<coverage_payload, trigger_payload, decision_payload,
               connected_payload, blocked_payload, trust_payload>
      payload;
};

struct metrics_summary {
  std::size_t handovers = 0;  // handover_triggered events
  std::size_t blocked = 0;    // handover_blocked events
  std::size_t decisions = 0;  // decision_made events
  double mean_processing_delay_ms = 0.0;
  double max_processing_delay_ms = 0.0;
  std::map<std::string, std::size_t> connections;  // connected tallies per id
  double total_time_s = 0.0;

  bool operator==(const metrics_summary&) const = default;
};

// Ids of every cell whose closed disk contains the position, in cell order.
std::vector<std::string> coverage_at(std::span<const cell> cells, vec2 position);

// True once the terminal sits beyond the hysteresis fraction of the serving
// cell's radius (or outside the cell altogether).
bool should_trigger(const cell& serving, vec2 position, double hysteresis);

struct run_result {
  std::vector<trace_event> trace;
  metrics_summary summary;
};

// Steps the terminal along its trajectory and emits the full event trace.
// Purely a function of the scenario: identical inputs give identical traces.
run_result run(const scenario& s);

metrics_summary metrics(std::span<const trace_event> trace);

}  // namespace vho::sim
