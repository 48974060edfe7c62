#include "vho/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vho::sim {

double distance(vec2 a, vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

const char* event_kind_name(event_kind k) {
  switch (k) {
    case event_kind::coverage_change: return "coverage_change";
    case event_kind::handover_triggered: return "handover_triggered";
    case event_kind::decision_made: return "decision_made";
    case event_kind::connected: return "connected";
    case event_kind::handover_blocked: return "handover_blocked";
    case event_kind::trust_updated: return "trust_updated";
  }
  return "unknown";
}

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw error(errc::scenario_invalid, field + " " + why);
}

}  // namespace

void validate(const scenario& s) {
  if (s.cells.empty()) invalid("cells", "must contain at least one cell");
  std::vector<std::string> seen;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const std::string field = "cells[" + std::to_string(i) + "]";
    const cell& c = s.cells[i];
    if (c.network.id.empty()) invalid(field + ".id", "must be non-empty");
    if (std::find(seen.begin(), seen.end(), c.network.id) != seen.end()) {
      invalid(field + ".id", "duplicates '" + c.network.id + "'");
    }
    seen.push_back(c.network.id);
    if (!std::isfinite(c.radius) || c.radius <= 0.0) {
      invalid(field + ".radius", "must be > 0");
    }
    if (!std::isfinite(c.center.x) || !std::isfinite(c.center.y)) {
      invalid(field + ".center", "must be finite");
    }
    try {
      selection::validate(c.network.offered, "offered");
    } catch (const error& e) {
      invalid(field + ".offered", e.what());
    }
  }
  try {
    selection::validate(s.mt_required, "required");
  } catch (const error& e) {
    invalid("mobile.required", e.what());
  }
  if (s.waypoints.size() < 2) {
    invalid("mobile.waypoints", "needs at least two waypoints");
  }
  for (const vec2& p : s.waypoints) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      invalid("mobile.waypoints", "must be finite");
    }
  }
  if (!std::isfinite(s.speed_mps) || s.speed_mps <= 0.0) {
    invalid("mobile.speed_mps", "must be > 0");
  }
  if (!std::isfinite(s.tick_s) || s.tick_s <= 0.0) {
    invalid("tick_s", "must be > 0");
  }
  if (!std::isfinite(s.hysteresis) || s.hysteresis <= 0.0 || s.hysteresis > 1.0) {
    invalid("decision.hysteresis", "must be in (0, 1]");
  }
  try {
    schemes::validate(s.delays);
  } catch (const error& e) {
    invalid("delays", e.what());
  }
  try {
    trust::validate(s.trust);
  } catch (const error& e) {
    invalid("trust", e.what());
  }
}

std::vector<std::string> coverage_at(std::span<const cell> cells,
                                     vec2 position) {
  std::vector<std::string> covering;
  for (const cell& c : cells) {
    if (distance(c.center, position) <= c.radius) {
      covering.push_back(c.network.id);
    }
  }
  return covering;
}

bool should_trigger(const cell& serving, vec2 position, double hysteresis) {
  const double d = distance(serving.center, position);
  return d / serving.radius > hysteresis || d > serving.radius;
}

namespace {

// Piecewise-linear trajectory walked at constant speed.
class trajectory {
 public:
  trajectory(std::span<const vec2> waypoints, double speed) {
    points_.assign(waypoints.begin(), waypoints.end());
    cumulative_.push_back(0.0);
    for (std::size_t i = 1; i < points_.size(); ++i) {
      cumulative_.push_back(cumulative_.back() +
                            distance(points_[i - 1], points_[i]));
    }
    duration_ = cumulative_.back() / speed;
    speed_ = speed;
  }

  double duration_s() const { return duration_; }

  vec2 position_at(double t) const {
    double travelled = std::min(t * speed_, cumulative_.back());
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), travelled);
    std::size_t seg = std::min<std::size_t>(it - cumulative_.begin(),
                                            cumulative_.size() - 1);
    if (seg == 0) return points_.front();
    const double seg_len = cumulative_[seg] - cumulative_[seg - 1];
    if (seg_len <= 0.0) return points_[seg];
    const double f = (travelled - cumulative_[seg - 1]) / seg_len;
    return {points_[seg - 1].x + f * (points_[seg].x - points_[seg - 1].x),
            points_[seg - 1].y + f * (points_[seg].y - points_[seg - 1].y)};
  }

 private:
  std::vector<vec2> points_;
  std::vector<double> cumulative_;
  double duration_ = 0.0;
  double speed_ = 1.0;
};

double round_ms(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

struct engine {
  const scenario& sc;
  std::vector<trace_event> trace;
  trust::trust_state trust_state;
  std::optional<std::size_t> serving;  // index into sc.cells
  bool trigger_armed = true;
  double now = 0.0;
  vec2 pos;

  explicit engine(const scenario& s)
      : sc(s), trust_state(trust::trust_state(s.trust)) {}

  const cell& serving_cell() const { return sc.cells[*serving]; }

  void emit(event_kind kind, auto payload) {
    trace.push_back({now, kind, pos, std::move(payload)});
  }

  std::optional<std::size_t> cell_index(const std::string& id) const {
    for (std::size_t i = 0; i < sc.cells.size(); ++i) {
      if (sc.cells[i].network.id == id) return i;
    }
    return std::nullopt;
  }

  // Runs the configured scheme over the covering cells and connects to the
  // outcome, if any. Returns true when a network was selected.
  bool decide(const std::vector<std::string>& covering) {
    std::vector<selection::candidate_network> candidates;
    for (const auto& id : covering) {
      candidates.push_back(sc.cells[*cell_index(id)].network);
    }
    schemes::decision_outcome outcome;
    switch (sc.decision_scheme) {
      case schemes::scheme::cvhd:
        outcome = schemes::run_cvhd(candidates, sc.mt_required, sc.profile,
                                    sc.decision_method, sc.delays);
        break;
      case schemes::scheme::dvhd:
        outcome = schemes::run_dvhd(candidates, sc.mt_required, sc.profile,
                                    sc.decision_method, sc.delays);
        break;
      case schemes::scheme::tdvhd: {
        auto result = schemes::run_tdvhd(candidates, sc.mt_required, sc.profile,
                                         sc.decision_method, sc.delays,
                                         trust_state);
        emit(event_kind::decision_made, decision_payload{result.outcome});
        if (result.outcome.blocked()) {
          emit(event_kind::handover_blocked, blocked_payload{result.ranked});
          return false;
        }
        connect(*result.outcome.selected);
        return true;
      }
    }
    emit(event_kind::decision_made, decision_payload{outcome});
    connect(*outcome.selected);
    return true;
  }

  void connect(const std::string& id) {
    serving = *cell_index(id);
    trigger_armed = true;
    emit(event_kind::connected, connected_payload{id});
  }

  void tick(const std::vector<std::string>& covering) {
    bool decided = false;
    const bool serving_covered =
        serving && std::find(covering.begin(), covering.end(),
                             serving_cell().network.id) != covering.end();
    if (serving && !serving_covered) {
      // Left the serving cell outright; hand over or drop to no coverage.
      emit(event_kind::handover_triggered,
           trigger_payload{serving_cell().network.id, covering});
      serving.reset();
      if (!covering.empty()) {
        decide(covering);  // blocked leaves the terminal unattached
        decided = true;
      }
    } else if (serving && should_trigger(serving_cell(), pos, sc.hysteresis)) {
      if (trigger_armed) {
        emit(event_kind::handover_triggered,
             trigger_payload{serving_cell().network.id, covering});
        const std::size_t previous = *serving;
        if (!decide(covering)) serving = previous;  // blocked: stay put
        decided = true;
        // Quiet until the terminal dips back inside the hysteresis ring.
        trigger_armed = false;
      }
    } else if (serving) {
      trigger_armed = true;
    }

    if (!serving && !covering.empty() && !decided) {
      decide(covering);  // initial attach or re-attach, not a handover
    }

    if (serving) {
      const std::string id = serving_cell().network.id;
      const selection::qos_vector& offered = serving_cell().network.offered;
      const double before = trust_state.lot(id);
      trust_state = trust::trust_update(trust_state, id, offered, sc.mt_required);
      emit(event_kind::trust_updated,
           trust_payload{id, before, trust_state.lot(id),
                         trust::violates(offered, sc.mt_required)});
    }
  }
};

}  // namespace

run_result run(const scenario& s) {
  validate(s);
  engine eng(s);
  const trajectory path(s.waypoints, s.speed_mps);
  const std::size_t steps =
      static_cast<std::size_t>(std::ceil(path.duration_s() / s.tick_s));

  std::vector<std::string> last_coverage;
  bool first = true;
  for (std::size_t step = 0; step <= steps; ++step) {
    eng.now = round_ms(step * s.tick_s);
    eng.pos = path.position_at(step * s.tick_s);
    const std::vector<std::string> covering = coverage_at(s.cells, eng.pos);
    if (first || covering != last_coverage) {
      eng.emit(event_kind::coverage_change, coverage_payload{covering});
      last_coverage = covering;
      first = false;
    }
    eng.tick(covering);
  }

  run_result result;
  result.trace = std::move(eng.trace);
  result.summary = metrics(result.trace);
  return result;
}

metrics_summary metrics(std::span<const trace_event> trace) {
  metrics_summary m;
  double delay_sum = 0.0;
  for (const trace_event& ev : trace) {
    m.total_time_s = std::max(m.total_time_s, ev.time_s);
    switch (ev.kind) {
      case event_kind::handover_triggered:
        ++m.handovers;
        break;
      case event_kind::handover_blocked:
        ++m.blocked;
        break;
      case event_kind::decision_made: {
        ++m.decisions;
        const double d =
            std::get<decision_payload>(ev.payload).outcome.processing_delay_ms;
        delay_sum += d;
        m.max_processing_delay_ms = std::max(m.max_processing_delay_ms, d);
        break;
      }
      case event_kind::connected:
        ++m.connections[std::get<connected_payload>(ev.payload).network];
        break;
      default:
        break;
    }
  }
  if (m.decisions > 0) {
    m.mean_processing_delay_ms = delay_sum / static_cast<double>(m.decisions);
  }
  return m;
}

}  // namespace vho::sim
