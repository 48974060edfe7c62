#pragma once

#include <stdexcept>
#include <string>

namespace vho {

enum class errc {
  negative_weight,
  sum_not_one,
  dimension_mismatch,
  non_positive_value,
  empty_candidate_set,
  duplicate_id,
  too_few_scores,
  zero_mean,
  empty_set,
  parse_error,
  scenario_invalid,
  invalid_argument,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace vho
