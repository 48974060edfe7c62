#pragma once

#include <span>
#include <string>
#include <vector>

#include "vho/madm.hpp"

namespace vho::selection {

// Bandwidth in kbit/s, delay and jitter in ms, cost in abstract money per
// unit time. Serves both as the terminal's requirement and a network's offer.
struct qos_vector {
  double bandwidth_kbps = 0.0;
  double delay_ms = 0.0;
  double jitter_ms = 0.0;
  double cost = 0.0;
};

// Throws when any field is non-positive or not finite; `role` names the
// vector in the message ("offered", "required", ...).
void validate(const qos_vector& q, const std::string& role);

enum class technology { wifi, wimax };
enum class method { saw, wpm };

const char* technology_name(technology t);
const char* method_name(method m);

// Handover criteria in fixed order: delay, bandwidth, cost, jitter.
// Bandwidth is the only benefit criterion.
std::vector<madm::criterion_spec> handover_criteria();

struct weight_profile {
  std::string application;
  madm::weight_vector weights;  // aligned with handover_criteria()
};

// Voice profile: delay 0.3, bandwidth 0.2, cost 0.2, jitter 0.3.
weight_profile voice_profile();

struct candidate_network {
  std::string id;
  technology tech = technology::wifi;
  qos_vector offered;
};

// One row per candidate in input order, columns from handover_criteria().
madm::decision_matrix build_matrix(std::span<const candidate_network> candidates);

// Centralized scoring: needs the whole candidate set because SAW
// normalization and the WPM ideal both reference column-wide extremes.
std::vector<double> global_nqv(std::span<const candidate_network> candidates,
                               const weight_profile& profile, method m);

// Per-network scoring against the terminal's requirement only, so each
// visitor network can evaluate itself without knowing its peers. Each
// criterion becomes the ratio offered/required (inverted for cost criteria),
// capped at a 2x surplus, then mapped into (0, 1].
double reference_nqv(const candidate_network& candidate,
                     const qos_vector& required, const weight_profile& profile,
                     method m);

struct scored_network {
  std::string id;
  double nqv = 0.0;
};

// Id with the highest score; ties keep the earliest entry.
std::string select_best(std::span<const scored_network> scored);

}  // namespace vho::selection
