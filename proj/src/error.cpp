#include "vho/error.hpp"

namespace vho {

const char* errc_name(errc code) {
  switch (code) {
    case errc::negative_weight: return "negative_weight";
    case errc::sum_not_one: return "sum_not_one";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::non_positive_value: return "non_positive_value";
    case errc::empty_candidate_set: return "empty_candidate_set";
    case errc::duplicate_id: return "duplicate_id";
    case errc::too_few_scores: return "too_few_scores";
    case errc::zero_mean: return "zero_mean";
    case errc::empty_set: return "empty_set";
    case errc::parse_error: return "parse_error";
    case errc::scenario_invalid: return "scenario_invalid";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace vho
