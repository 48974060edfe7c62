#include "vho/schemes.hpp"

#include <cmath>

#include "vho/madm.hpp"

namespace vho::schemes {

const char* scheme_name(scheme s) {
  switch (s) {
    case scheme::cvhd: return "cvhd";
    case scheme::dvhd: return "dvhd";
    case scheme::tdvhd: return "tdvhd";
  }
  return "unknown";
}

void validate(const delay_params& p) {
  const double fields[] = {p.t_uplink_ms, p.t_downlink_ms, p.t_calc_mt_ms,
                           p.t_calc_vn_ms, p.t_select_ms};
  const char* names[] = {"t_uplink_ms", "t_downlink_ms", "t_calc_mt_ms",
                         "t_calc_vn_ms", "t_select_ms"};
  for (std::size_t k = 0; k < 5; ++k) {
    if (!std::isfinite(fields[k]) || fields[k] < 0.0) {
      throw error(errc::invalid_argument,
                  std::string("delays.") + names[k] + " must be finite and >= 0");
    }
  }
}

namespace {

void require_candidates(std::span<const selection::candidate_network> candidates) {
  if (candidates.empty()) {
    throw error(errc::empty_candidate_set, "no candidate networks to evaluate");
  }
}

std::vector<selection::scored_network> zip_scores(
    std::span<const selection::candidate_network> candidates,
    const std::vector<double>& scores) {
  std::vector<selection::scored_network> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.push_back({candidates[i].id, scores[i]});
  }
  return out;
}

decision_outcome run_distributed(
    std::span<const selection::candidate_network> candidates,
    const selection::qos_vector& required,
    const selection::weight_profile& profile, selection::method m,
    const delay_params& delays) {
  require_candidates(candidates);
  validate(delays);
  decision_outcome out;
  out.used = scheme::dvhd;
  out.method_used = m;
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const auto& c : candidates) {
    scores.push_back(selection::reference_nqv(c, required, profile, m));
  }
  out.per_network_scores = zip_scores(candidates, scores);
  out.selected = selection::select_best(out.per_network_scores);
  out.processing_delay_ms = delays.t_uplink_ms + delays.t_calc_vn_ms +
                            delays.t_downlink_ms + delays.t_select_ms;
  out.messages = 2 * candidates.size();
  return out;
}

}  // namespace

decision_outcome run_cvhd(std::span<const selection::candidate_network> candidates,
                          const selection::qos_vector& required,
                          const selection::weight_profile& profile,
                          selection::method m, const delay_params& delays) {
  require_candidates(candidates);
  validate(delays);
  selection::validate(required, "required");
  decision_outcome out;
  out.used = scheme::cvhd;
  out.method_used = m;
  out.per_network_scores =
      zip_scores(candidates, selection::global_nqv(candidates, profile, m));
  out.selected = selection::select_best(out.per_network_scores);
  const double n = static_cast<double>(candidates.size());
  out.processing_delay_ms =
      n * (delays.t_uplink_ms + delays.t_downlink_ms) +
      n * delays.t_calc_mt_ms + delays.t_select_ms;
  out.messages = 2 * candidates.size();
  return out;
}

decision_outcome run_dvhd(std::span<const selection::candidate_network> candidates,
                          const selection::qos_vector& required,
                          const selection::weight_profile& profile,
                          selection::method m, const delay_params& delays) {
  return run_distributed(candidates, required, profile, m, delays);
}

tdvhd_result run_tdvhd(std::span<const selection::candidate_network> candidates,
                       const selection::qos_vector& required,
                       const selection::weight_profile& profile,
                       selection::method m, const delay_params& delays,
                       const trust::trust_state& trust) {
  tdvhd_result result;
  decision_outcome out = run_distributed(candidates, required, profile, m, delays);
  out.used = scheme::tdvhd;

  std::vector<std::string> ids;
  std::vector<double> scores;
  for (const auto& s : out.per_network_scores) {
    ids.push_back(s.id);
    scores.push_back(s.nqv);
  }
  result.ranked = madm::rank(ids, scores).order_ids;

  const trust::gate_result gate = trust::lot_gate(result.ranked, trust);
  out.selected = gate.connect;
  out.processing_delay_ms += (gate.tested - 1) * delays.t_select_ms;
  result.outcome = std::move(out);
  return result;
}

}  // namespace vho::schemes
