#include "vho/scenario_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace vho::io {

using nlohmann::json;

namespace {

[[noreturn]] void invalid_field(const std::string& field, const std::string& why) {
  throw error(errc::scenario_invalid, field + " " + why);
}

selection::qos_vector parse_qos(const json& j) {
  selection::qos_vector q;
  q.bandwidth_kbps = j.at("bandwidth_kbps").get<double>();
  q.delay_ms = j.at("delay_ms").get<double>();
  q.jitter_ms = j.at("jitter_ms").get<double>();
  q.cost = j.at("cost").get<double>();
  return q;
}

sim::vec2 parse_point(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw error(errc::parse_error, "points must be [x, y] arrays");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

selection::technology parse_technology(const std::string& s,
                                       const std::string& field) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "wifi") return selection::technology::wifi;
  if (t == "wimax") return selection::technology::wimax;
  invalid_field(field, "must be 'wifi' or 'wimax', got '" + s + "'");
}

sim::scenario parse_scenario(const json& doc) {
  sim::scenario s;

  std::size_t idx = 0;
  for (const json& jc : doc.at("cells")) {
    const std::string field = "cells[" + std::to_string(idx++) + "]";
    sim::cell c;
    c.network.id = jc.at("id").get<std::string>();
    c.network.tech =
        parse_technology(jc.at("technology").get<std::string>(), field + ".technology");
    c.network.offered = parse_qos(jc.at("offered"));
    c.center = parse_point(jc.at("center"));
    c.radius = jc.at("radius").get<double>();
    s.cells.push_back(std::move(c));
  }

  const json& mobile = doc.at("mobile");
  s.mt_required = parse_qos(mobile.at("required"));
  for (const json& wp : mobile.at("waypoints")) {
    s.waypoints.push_back(parse_point(wp));
  }
  s.speed_mps = mobile.at("speed_mps").get<double>();

  const json& decision = doc.at("decision");
  const std::string scheme_token = decision.at("scheme").get<std::string>();
  if (scheme_token == "cvhd") {
    s.decision_scheme = schemes::scheme::cvhd;
  } else if (scheme_token == "dvhd") {
    s.decision_scheme = schemes::scheme::dvhd;
  } else if (scheme_token == "tdvhd") {
    s.decision_scheme = schemes::scheme::tdvhd;
  } else {
    invalid_field("decision.scheme",
                  "must be cvhd, dvhd or tdvhd, got '" + scheme_token + "'");
  }
  const std::string method_token = decision.at("method").get<std::string>();
  if (method_token == "saw") {
    s.decision_method = selection::method::saw;
  } else if (method_token == "wpm") {
    s.decision_method = selection::method::wpm;
  } else {
    invalid_field("decision.method", "must be saw or wpm, got '" + method_token + "'");
  }
  s.hysteresis = decision.value("hysteresis", 0.9);

  const std::string application = mobile.value("application", "voice");
  if (decision.contains("weights")) {
    std::vector<double> weights;
    for (const json& w : decision.at("weights")) weights.push_back(w.get<double>());
    try {
      s.profile = {application, madm::weight_vector(std::move(weights))};
    } catch (const error& e) {
      invalid_field("decision.weights", e.what());
    }
  } else if (application == "voice") {
    s.profile = selection::voice_profile();
  } else {
    invalid_field("mobile.application",
                  "has no built-in weights; give decision.weights for '" +
                      application + "'");
  }

  if (doc.contains("delays")) {
    const json& d = doc.at("delays");
    s.delays.t_uplink_ms = d.value("t_uplink_ms", s.delays.t_uplink_ms);
    s.delays.t_downlink_ms = d.value("t_downlink_ms", s.delays.t_downlink_ms);
    s.delays.t_calc_mt_ms = d.value("t_calc_mt_ms", s.delays.t_calc_mt_ms);
    s.delays.t_calc_vn_ms = d.value("t_calc_vn_ms", s.delays.t_calc_vn_ms);
    s.delays.t_select_ms = d.value("t_select_ms", s.delays.t_select_ms);
  }
  if (doc.contains("trust")) {
    const json& t = doc.at("trust");
    s.trust.threshold = t.value("threshold", s.trust.threshold);
    s.trust.delta_plus = t.value("delta_plus", s.trust.delta_plus);
    s.trust.delta_minus = t.value("delta_minus", s.trust.delta_minus);
    s.trust.default_lot = t.value("default_lot", s.trust.default_lot);
  }
  s.tick_s = doc.value("tick_s", 1.0);
  s.seed = doc.value("seed", std::uint64_t{0});
  return s;
}

double ms_precision(double seconds) {
  return std::round(seconds * 1000.0) / 1000.0;
}

json outcome_json(const schemes::decision_outcome& outcome) {
  json scores = json::array();
  for (const auto& s : outcome.per_network_scores) {
    scores.push_back({{"id", s.id}, {"nqv", s.nqv}});
  }
  return {{"scheme", schemes::scheme_name(outcome.used)},
          {"method", selection::method_name(outcome.method_used)},
          {"selected", outcome.selected ? json(*outcome.selected) : json()},
          {"blocked", outcome.blocked()},
          {"processing_delay_ms", outcome.processing_delay_ms},
          {"messages", outcome.messages},
          {"scores", std::move(scores)}};
}

}  // namespace

sim::scenario load_scenario(std::istream& in, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, origin + ": " + e.what());
  }
  try {
    sim::scenario s = parse_scenario(doc);
    sim::validate(s);
    return s;
  } catch (const json::exception& e) {
    // missing keys and wrong types are structural problems with the file
    throw error(errc::parse_error, origin + ": " + e.what());
  }
}

sim::scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw error(errc::parse_error, "cannot open '" + path.string() + "'");
  }
  return load_scenario(in, path.string());
}

std::string trace_event_line(const sim::trace_event& event) {
  json j{{"time", ms_precision(event.time_s)},
         {"kind", sim::event_kind_name(event.kind)},
         {"position", {event.position.x, event.position.y}}};
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, sim::coverage_payload>) {
          j["covering"] = payload.covering;
        } else if constexpr (std::is_same_v<T, sim::trigger_payload>) {
          j["serving"] = payload.serving;
          j["covering"] = payload.covering;
        } else if constexpr (std::is_same_v<T, sim::decision_payload>) {
          j["outcome"] = outcome_json(payload.outcome);
        } else if constexpr (std::is_same_v<T, sim::connected_payload>) {
          j["network"] = payload.network;
        } else if constexpr (std::is_same_v<T, sim::blocked_payload>) {
          j["tested"] = payload.tested;
        } else {
          j["network"] = payload.network;
          j["lot_before"] = payload.lot_before;
          j["lot_after"] = payload.lot_after;
          j["violation"] = payload.violation;
        }
      },
      event.payload);
  return j.dump();
}

void write_trace(std::ostream& out, std::span<const sim::trace_event> trace) {
  for (const auto& event : trace) out << trace_event_line(event) << '\n';
}

std::string trace_to_string(std::span<const sim::trace_event> trace) {
  std::ostringstream out;
  write_trace(out, trace);
  return out.str();
}

}  // namespace vho::io
