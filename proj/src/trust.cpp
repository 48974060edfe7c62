#include "vho/trust.hpp"

#include <algorithm>
#include <cmath>

namespace vho::trust {

void validate(const trust_params& p) {
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(p.threshold)) {
    throw error(errc::invalid_argument, "trust.threshold must be in [0, 1]");
  }
  if (!in_unit(p.default_lot)) {
    throw error(errc::invalid_argument, "trust.default_lot must be in [0, 1]");
  }
  if (!std::isfinite(p.delta_plus) || p.delta_plus <= 0.0) {
    throw error(errc::invalid_argument, "trust.delta_plus must be > 0");
  }
  if (!std::isfinite(p.delta_minus) || p.delta_minus <= 0.0) {
    throw error(errc::invalid_argument, "trust.delta_minus must be > 0");
  }
}

trust_state::trust_state(trust_params params) : params_(params) {
  validate(params_);
}

double trust_state::lot(const std::string& network) const {
  const auto it = lot_.find(network);
  return it == lot_.end() ? params_.default_lot : it->second;
}

trust_state trust_state::with_lot(const std::string& network,
                                  double value) const {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw error(errc::invalid_argument, "level of trust must be in [0, 1]");
  }
  trust_state next = *this;
  next.lot_[network] = value;
  return next;
}

bool violates(const selection::qos_vector& observed,
              const selection::qos_vector& required) {
  return observed.bandwidth_kbps < required.bandwidth_kbps ||
         observed.delay_ms > required.delay_ms ||
         observed.jitter_ms > required.jitter_ms ||
         observed.cost > required.cost;
}

gate_result lot_gate(std::span<const std::string> ranked,
                     const trust_state& state) {
  if (ranked.empty()) {
    throw error(errc::empty_set, "lot_gate needs a non-empty ranked list");
  }
  gate_result result;
  for (const auto& id : ranked) {
    ++result.tested;
    if (state.lot(id) >= state.params().threshold) {
      result.connect = id;
      return result;
    }
  }
  return result;  // handover blocked
}

trust_state trust_update(const trust_state& state, const std::string& network,
                         const selection::qos_vector& observed,
                         const selection::qos_vector& required) {
  selection::validate(observed, "observed");
  selection::validate(required, "required");
  const double old = state.lot(network);
  const double delta = violates(observed, required)
                           ? -state.params().delta_minus
                           : state.params().delta_plus;
  return state.with_lot(network, std::clamp(old + delta, 0.0, 1.0));
}

}  // namespace vho::trust
