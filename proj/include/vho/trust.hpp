#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "vho/selection.hpp"

namespace vho::trust {

struct trust_params {
  double threshold = 0.5;
  double delta_plus = 0.05;
  double delta_minus = 0.1;
  double default_lot = 0.5;  // level of trust for first-seen networks
};

void validate(const trust_params& p);

// Per-network level-of-trust values in [0, 1]. Immutable: updates return a
// new state, so snapshots can be shared freely.
class trust_state {
 public:
  trust_state() = default;
  explicit trust_state(trust_params params);

  const trust_params& params() const { return params_; }
  double lot(const std::string& network) const;
  const std::map<std::string, double>& known() const { return lot_; }

  // Copy of this state with one network's level of trust replaced.
  trust_state with_lot(const std::string& network, double value) const;

 private:
  trust_params params_;
  std::map<std::string, double> lot_;
};

// True when the delivered QoS breaks any single requirement: less bandwidth
// than required, or more delay, jitter or cost.
bool violates(const selection::qos_vector& observed,
              const selection::qos_vector& required);

struct gate_result {
  std::optional<std::string> connect;  // empty means handover blocked
  std::size_t tested = 0;              // ranked entries examined

  bool blocked() const { return !connect.has_value(); }
};

// Walks the ranked candidates best-first and connects to the first whose
// level of trust reaches the threshold; blocks when none qualifies.
gate_result lot_gate(std::span<const std::string> ranked,
                     const trust_state& state);

// Applies one trust test for `network`: a violated requirement lowers its
// level of trust by delta_minus, otherwise it rises by delta_plus, clamped
// to [0, 1] either way.
trust_state trust_update(const trust_state& state, const std::string& network,
                         const selection::qos_vector& observed,
                         const selection::qos_vector& required);

}  // namespace vho::trust
