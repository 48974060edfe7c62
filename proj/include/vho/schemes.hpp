#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vho/selection.hpp"
#include "vho/trust.hpp"

namespace vho::schemes {

enum class scheme { cvhd, dvhd, tdvhd };

const char* scheme_name(scheme s);

// Delay model constants, all in milliseconds. The centralized scheme pays
// per-candidate messaging and terminal-side computation; the distributed
// schemes pay one message round trip because the visitor networks compute
// their scores in parallel.
struct delay_params {
  double t_uplink_ms = 10.0;    // per MT -> network message
  double t_downlink_ms = 10.0;  // per network -> MT message
  double t_calc_mt_ms = 5.0;    // per NQV computed on the mobile terminal
  double t_calc_vn_ms = 5.0;    // per NQV computed on a visitor network
  double t_select_ms = 1.0;     // the MT's final max-selection
};

void validate(const delay_params& p);

struct decision_outcome {
  scheme used = scheme::cvhd;
  selection::method method_used = selection::method::saw;
  std::optional<std::string> selected;  // empty: handover blocked (tdvhd only)
  double processing_delay_ms = 0.0;
  std::size_t messages = 0;
  std::vector<selection::scored_network> per_network_scores;

  bool blocked() const { return !selected.has_value(); }
};

// Centralized decision: the terminal polls every candidate and computes all
// scores itself. delay = N*(t_uplink + t_downlink) + N*t_calc_mt + t_select.
decision_outcome run_cvhd(std::span<const selection::candidate_network> candidates,
                          const selection::qos_vector& required,
                          const selection::weight_profile& profile,
                          selection::method m, const delay_params& delays);

// Distributed decision: each visitor network scores itself against the
// requirement; the computations overlap in time.
// delay = t_uplink + t_calc_vn + t_downlink + t_select.
decision_outcome run_dvhd(std::span<const selection::candidate_network> candidates,
                          const selection::qos_vector& required,
                          const selection::weight_profile& profile,
                          selection::method m, const delay_params& delays);

struct tdvhd_result {
  decision_outcome outcome;
  std::vector<std::string> ranked;  // candidate ids best-first
};

// Trusted distributed decision: distributed scoring, then the level-of-trust
// gate walks the ranking. Each gate iteration beyond the first adds one
// t_select. The trust state is read, never modified; updates happen after
// connection via trust_update.
tdvhd_result run_tdvhd(std::span<const selection::candidate_network> candidates,
                       const selection::qos_vector& required,
                       const selection::weight_profile& profile,
                       selection::method m, const delay_params& delays,
                       const trust::trust_state& trust);

}  // namespace vho::schemes
