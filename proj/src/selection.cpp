#include "vho/selection.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace vho::selection {

void validate(const qos_vector& q, const std::string& role) {
  const double fields[] = {q.bandwidth_kbps, q.delay_ms, q.jitter_ms, q.cost};
  const char* names[] = {"bandwidth_kbps", "delay_ms", "jitter_ms", "cost"};
  for (std::size_t k = 0; k < 4; ++k) {
    if (!std::isfinite(fields[k]) || fields[k] <= 0.0) {
      throw error(errc::invalid_argument,
                  role + "." + names[k] + " must be finite and > 0");
    }
  }
}

const char* technology_name(technology t) {
  return t == technology::wifi ? "wifi" : "wimax";
}

const char* method_name(method m) { return m == method::saw ? "saw" : "wpm"; }

std::vector<madm::criterion_spec> handover_criteria() {
  return {{"delay", madm::direction::cost},
          {"bandwidth", madm::direction::benefit},
          {"cost", madm::direction::cost},
          {"jitter", madm::direction::cost}};
}

weight_profile voice_profile() {
  return {"voice", madm::weight_vector({0.3, 0.2, 0.2, 0.3})};
}

namespace {

// Criterion values of one offer, in handover_criteria() order.
std::vector<double> criterion_row(const qos_vector& q) {
  return {q.delay_ms, q.bandwidth_kbps, q.cost, q.jitter_ms};
}

}  // namespace

madm::decision_matrix build_matrix(
    std::span<const candidate_network> candidates) {
  if (candidates.empty()) {
    throw error(errc::empty_candidate_set, "no candidate networks to evaluate");
  }
  std::set<std::string> ids;
  std::vector<std::string> alternatives;
  std::vector<std::vector<double>> rows;
  for (const auto& c : candidates) {
    if (!ids.insert(c.id).second) {
      throw error(errc::duplicate_id, "duplicate candidate id '" + c.id + "'");
    }
    validate(c.offered, "offered(" + c.id + ")");
    alternatives.push_back(c.id);
    rows.push_back(criterion_row(c.offered));
  }
  return madm::decision_matrix(handover_criteria(), std::move(alternatives),
                               rows);
}

std::vector<double> global_nqv(std::span<const candidate_network> candidates,
                               const weight_profile& profile, method m) {
  const madm::decision_matrix matrix = build_matrix(candidates);
  if (m == method::saw) {
    return madm::saw_scores(madm::normalize(matrix), profile.weights);
  }
  return madm::wpm_ratios(matrix, profile.weights);
}

double reference_nqv(const candidate_network& candidate,
                     const qos_vector& required, const weight_profile& profile,
                     method m) {
  validate(candidate.offered, "offered(" + candidate.id + ")");
  validate(required, "required");
  const std::vector<double> offered = criterion_row(candidate.offered);
  const std::vector<double> needed = criterion_row(required);
  const std::vector<madm::criterion_spec> specs = handover_criteria();
  const madm::weight_vector& w = profile.weights;
  if (w.size() != specs.size()) {
    throw error(errc::dimension_mismatch,
                "profile weights do not match the handover criteria");
  }
  double saw = 0.0;
  double log_wpm = 0.0;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    double ratio = specs[j].dir == madm::direction::benefit
                       ? offered[j] / needed[j]
                       : needed[j] / offered[j];
    ratio = std::min(ratio, 2.0);  // cap the reward for surplus quality
    saw += w[j] * (ratio / 2.0);
    log_wpm += w[j] * std::log(ratio / 2.0);
  }
  return m == method::saw ? saw : std::exp(log_wpm);
}

std::string select_best(std::span<const scored_network> scored) {
  if (scored.empty()) {
    throw error(errc::empty_set, "no scored networks to select from");
  }
  const auto best = std::max_element(
      scored.begin(), scored.end(),
      [](const scored_network& a, const scored_network& b) {
        return a.nqv < b.nqv;
      });
  return best->id;
}

}  // namespace vho::selection
