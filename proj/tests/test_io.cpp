#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "vho/matrix_io.hpp"
#include "vho/scenario_io.hpp"

using namespace vho;

namespace {

io::matrix_file parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return io::load_matrix(in, "<test>");
}

const std::string valid_matrix =
    "# comment\n"
    "X1,X2\n"
    "benefit,cost\n"
    "0.5,0.5\n"
    "A1,4,2\n"
    "A2,1,8\n";

}  // namespace

TEST_CASE("load_matrix reads names, directions, weights and rows") {
  const io::matrix_file f = parse_matrix(valid_matrix);
  CHECK(f.matrix.criterion_count() == 2);
  CHECK(f.matrix.alternative_count() == 2);
  CHECK(f.matrix.criteria()[0].name == "X1");
  CHECK(f.matrix.criteria()[0].dir == madm::direction::benefit);
  CHECK(f.matrix.criteria()[1].dir == madm::direction::cost);
  CHECK(f.matrix.alternatives() == std::vector<std::string>{"A1", "A2"});
  CHECK(f.matrix.at(0, 0) == 4.0);
  CHECK(f.matrix.at(1, 1) == 8.0);
  CHECK(f.weights[0] == 0.5);
}

TEST_CASE("load_matrix tolerates blank lines, comments and spaces") {
  const io::matrix_file f = parse_matrix(
      "\n# header comment\n  X1 , X2\n BENEFIT , Cost \n0.5, 0.5\n\n# rows\nA1, 4 ,2\nA2,1,8\n");
  CHECK(f.matrix.alternative_count() == 2);
  CHECK(f.matrix.at(0, 0) == 4.0);
}

TEST_CASE("the bundled example matrices load") {
  const io::matrix_file d =
      io::load_matrix_file(std::string(VHO_DATA_DIR) + "/paper_D.csv");
  CHECK(d.matrix.alternative_count() == 6);
  CHECK(d.matrix.criterion_count() == 4);
  for (const auto& c : d.matrix.criteria()) {
    CHECK(c.dir == madm::direction::benefit);
  }
  const io::matrix_file dprime =
      io::load_matrix_file(std::string(VHO_DATA_DIR) + "/paper_Dprime.csv");
  CHECK(dprime.matrix.criteria()[2].dir == madm::direction::cost);
  CHECK(dprime.matrix.at(0, 0) == 0.00062);
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_matrix("X1,X2\nbenefit,cost\n0.5,0.5\nA1,4\n");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("<test>:4") != std::string::npos);
  }
  try {
    parse_matrix("X1\nbenefit\n1\nA1,abc\n");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find(":4") != std::string::npos);
  }
  try {
    parse_matrix("X1\nupwards\n1\nA1,2\n");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("structural problems are parse errors") {
  CHECK_THROWS_AS(parse_matrix(""), error);
  CHECK_THROWS_AS(parse_matrix("X1\nbenefit\n1\n"), error);          // no rows
  CHECK_THROWS_AS(parse_matrix("X1,X1\nbenefit,cost\n0.5,0.5\nA1,1,2\n"), error);
  CHECK_THROWS_AS(parse_matrix("X1\nbenefit\n1\nA1,1\nA1,2\n"), error);
  CHECK_THROWS_AS(parse_matrix("X1\nbenefit\n1\nA1,0\n"), error);    // non-positive
  CHECK_THROWS_AS(parse_matrix("X1\nbenefit\n1\nA1,-3\n"), error);
}

TEST_CASE("weight problems keep their own error codes") {
  try {
    parse_matrix("X1,X2\nbenefit,cost\n0.5,0.6\nA1,1,2\n");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::sum_not_one);
  }
  try {
    parse_matrix("X1,X2\nbenefit,cost\n1.5,-0.5\nA1,1,2\n");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::negative_weight);
  }
}

TEST_CASE("the bundled scenario loads with every knob in place") {
  const sim::scenario s =
      io::load_scenario_file(std::string(VHO_DATA_DIR) + "/fig2.json");
  REQUIRE(s.cells.size() == 2);
  CHECK(s.cells[0].network.id == "wimax1");
  CHECK(s.cells[0].network.tech == selection::technology::wimax);
  CHECK(s.cells[0].radius == 600.0);
  CHECK(s.cells[1].network.offered.bandwidth_kbps == 6000.0);
  CHECK(s.mt_required.delay_ms == 100.0);
  CHECK(s.waypoints.size() == 2);
  CHECK(s.speed_mps == 15.0);
  CHECK(s.decision_scheme == schemes::scheme::dvhd);
  CHECK(s.decision_method == selection::method::saw);
  CHECK(s.hysteresis == 0.9);
  CHECK(s.profile.application == "voice");
  CHECK(s.profile.weights[0] == 0.3);
  CHECK(s.delays.t_uplink_ms == 10.0);
  CHECK(s.trust.threshold == 0.5);
  CHECK(s.tick_s == 1.0);
  CHECK(s.seed == 42);
}

TEST_CASE("scenario defaults fill in optional blocks") {
  std::istringstream in(R"({
    "cells": [{"id": "c", "technology": "wifi", "center": [0, 0], "radius": 10,
               "offered": {"bandwidth_kbps": 1000, "delay_ms": 10, "jitter_ms": 1, "cost": 1}}],
    "mobile": {"required": {"bandwidth_kbps": 100, "delay_ms": 50, "jitter_ms": 5, "cost": 5},
               "waypoints": [[0, 0], [5, 0]], "speed_mps": 1},
    "decision": {"scheme": "dvhd", "method": "wpm"}
  })");
  const sim::scenario s = io::load_scenario(in, "<test>");
  CHECK(s.tick_s == 1.0);
  CHECK(s.hysteresis == 0.9);
  CHECK(s.trust.threshold == 0.5);
  CHECK(s.delays.t_select_ms == 1.0);
  CHECK(s.profile.application == "voice");
  CHECK(s.decision_method == selection::method::wpm);
  CHECK(s.seed == 0);
}

TEST_CASE("malformed scenario JSON is a parse error") {
  std::istringstream in("{ not json");
  CHECK_THROWS_AS(io::load_scenario(in, "<test>"), error);
  try {
    std::istringstream in2("{\"cells\": []}");
    io::load_scenario(in2, "<test>");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);  // missing mobile block
  }
}

TEST_CASE("scenario invariant violations name the field") {
  const std::string base = R"({
    "cells": [{"id": "c", "technology": "wifi", "center": [0, 0], "radius": 10,
               "offered": {"bandwidth_kbps": 1000, "delay_ms": 10, "jitter_ms": 1, "cost": 1}}],
    "mobile": {"required": {"bandwidth_kbps": 100, "delay_ms": 50, "jitter_ms": 5, "cost": 5},
               "waypoints": [[0, 0], [5, 0]], "speed_mps": 1},
    "decision": {"scheme": "dvhd", "method": "saw"},
    "tick_s": 0
  })";
  try {
    std::istringstream in(base);
    io::load_scenario(in, "<test>");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::scenario_invalid);
    CHECK(std::string(e.what()).find("tick") != std::string::npos);
  }
}

TEST_CASE("unknown scheme and application tokens are named") {
  const std::string bad_scheme = R"({
    "cells": [{"id": "c", "technology": "wifi", "center": [0, 0], "radius": 10,
               "offered": {"bandwidth_kbps": 1000, "delay_ms": 10, "jitter_ms": 1, "cost": 1}}],
    "mobile": {"required": {"bandwidth_kbps": 100, "delay_ms": 50, "jitter_ms": 5, "cost": 5},
               "waypoints": [[0, 0], [5, 0]], "speed_mps": 1},
    "decision": {"scheme": "central", "method": "saw"}
  })";
  try {
    std::istringstream in(bad_scheme);
    io::load_scenario(in, "<test>");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::scenario_invalid);
    CHECK(std::string(e.what()).find("decision.scheme") != std::string::npos);
  }

  const std::string bad_weights = R"({
    "cells": [{"id": "c", "technology": "wifi", "center": [0, 0], "radius": 10,
               "offered": {"bandwidth_kbps": 1000, "delay_ms": 10, "jitter_ms": 1, "cost": 1}}],
    "mobile": {"required": {"bandwidth_kbps": 100, "delay_ms": 50, "jitter_ms": 5, "cost": 5},
               "waypoints": [[0, 0], [5, 0]], "speed_mps": 1},
    "decision": {"scheme": "dvhd", "method": "saw", "weights": [0.5, 0.5, 0.5, 0.5]}
  })";
  try {
    std::istringstream in(bad_weights);
    io::load_scenario(in, "<test>");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::scenario_invalid);
    CHECK(std::string(e.what()).find("decision.weights") != std::string::npos);
  }
}

TEST_CASE("trace events serialize one JSON object per line") {
  sim::trace_event ev;
  ev.time_s = 1.23456;
  ev.kind = sim::event_kind::connected;
  ev.position = {10.0, -2.5};
  ev.payload = sim::connected_payload{"wifi1"};
  const std::string line = io::trace_event_line(ev);
  const nlohmann::json j = nlohmann::json::parse(line);
  CHECK(j.at("time").get<double>() == 1.235);  // millisecond precision
  CHECK(j.at("kind").get<std::string>() == "connected");
  CHECK(j.at("network").get<std::string>() == "wifi1");
  CHECK(j.at("position")[0].get<double>() == 10.0);
  CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("decision events carry the full outcome") {
  schemes::decision_outcome outcome;
  outcome.used = schemes::scheme::tdvhd;
  outcome.method_used = selection::method::wpm;
  outcome.selected = std::nullopt;
  outcome.processing_delay_ms = 27.0;
  outcome.messages = 4;
  outcome.per_network_scores = {{"a", 0.7}, {"b", 0.3}};
  sim::trace_event ev;
  ev.kind = sim::event_kind::decision_made;
  ev.payload = sim::decision_payload{outcome};
  const nlohmann::json j = nlohmann::json::parse(io::trace_event_line(ev));
  CHECK(j.at("outcome").at("scheme") == "tdvhd");
  CHECK(j.at("outcome").at("method") == "wpm");
  CHECK(j.at("outcome").at("blocked") == true);
  CHECK(j.at("outcome").at("selected").is_null());
  CHECK(j.at("outcome").at("messages") == 4);
  CHECK(j.at("outcome").at("scores").size() == 2);
  CHECK(j.at("outcome").at("scores")[0].at("id") == "a");
}

TEST_CASE("write_trace emits one line per event") {
  std::vector<sim::trace_event> trace(3);
  trace[0].payload = sim::coverage_payload{{"a"}};
  trace[1].kind = sim::event_kind::connected;
  trace[1].payload = sim::connected_payload{"a"};
  trace[2].kind = sim::event_kind::trust_updated;
  trace[2].payload = sim::trust_payload{"a", 0.5, 0.55, false};
  std::ostringstream out;
  io::write_trace(out, trace);
  const std::string text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(nlohmann::json::parse(line).is_object());
  }
}
