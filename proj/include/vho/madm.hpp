#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vho/error.hpp"

namespace vho::madm {

enum class direction { benefit, cost };

const char* direction_name(direction d);

struct criterion_spec {
  std::string name;
  direction dir = direction::benefit;
};

// Result of checking a raw weight list: all entries >= 0 and the sum within
// 1e-9 of one.
struct weight_check {
  enum class status { ok, negative_weight, sum_not_one };
  status state = status::ok;
  double sum = 0.0;                // total of all entries
  std::size_t offending_index = 0; // first negative entry, when any

  explicit operator bool() const { return state == status::ok; }
};

inline constexpr double weight_sum_tolerance = 1e-9;

weight_check validate_weights(std::span<const double> weights);

// Per-criterion importance weights. Construction enforces the weight_check
// contract; instances are immutable afterwards.
class weight_vector {
 public:
  explicit weight_vector(std::vector<double> weights);

  std::span<const double> values() const { return weights_; }
  double operator[](std::size_t j) const { return weights_[j]; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

// Alternatives x criteria grid of strictly positive finite values.
// Row i holds the raw criterion values of alternative i.
class decision_matrix {
 public:
  decision_matrix(std::vector<criterion_spec> criteria,
                  std::vector<std::string> alternatives,
                  const std::vector<std::vector<double>>& rows);

  std::size_t alternative_count() const { return alternatives_.size(); }
  std::size_t criterion_count() const { return criteria_.size(); }
  const std::vector<criterion_spec>& criteria() const { return criteria_; }
  const std::vector<std::string>& alternatives() const { return alternatives_; }

  double at(std::size_t i, std::size_t j) const {
    return values_[i * criteria_.size() + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * criteria_.size(), criteria_.size()};
  }

 private:
  std::vector<criterion_spec> criteria_;
  std::vector<std::string> alternatives_;
  std::vector<double> values_;  // row-major
};

// Rescales every column into (0, 1]: benefit columns divide by the column
// max, cost columns divide the column min by each value. The result is an
// all-benefit matrix with at least one 1 per column.
decision_matrix normalize(const decision_matrix& m);

// Weighted sum over an already normalized (all-benefit) matrix.
std::vector<double> saw_scores(const decision_matrix& normalized,
                               const weight_vector& w);

// Weighted product of one alternative's raw values: benefit criteria
// contribute x^(+w), cost criteria x^(-w). Evaluated as exp of the weighted
// log sum so many small factors do not underflow.
double wpm_value(std::span<const double> row, const weight_vector& w,
                 std::span<const criterion_spec> specs);

// Best value per column: max for benefit criteria, min for cost criteria.
std::vector<double> ideal_alternative(const decision_matrix& m);

// Ratio of each alternative's weighted product to the ideal alternative's.
// Every ratio lies in (0, 1]; it equals 1 exactly when the row attains the
// best value in every column.
std::vector<double> wpm_ratios(const decision_matrix& m,
                               const weight_vector& w);

struct ranking {
  std::vector<std::size_t> order;    // indices into alternatives, best first
  std::vector<std::string> order_ids;
  std::vector<double> scores;        // source scores, alternative-aligned
};

// Sorts alternatives by score descending; ties keep the earlier alternative
// first so identical inputs always produce identical orders.
ranking rank(std::span<const std::string> alternatives,
             std::span<const double> scores);

// Relative standard deviation in percent, using the sample (n-1) standard
// deviation.
double rsd(std::span<const double> scores);

struct method_report {
  std::vector<double> scores;        // alternative-aligned
  ranking ranked;
  std::optional<double> rsd_pct;
  std::optional<errc> rsd_error;     // set when rsd_pct is empty
  std::string winner;
};

// Full SAW evaluation of a raw matrix: normalize, score, rank, RSD.
method_report saw_report(const decision_matrix& m, const weight_vector& w);

// Full WPM evaluation of a raw matrix: ideal ratios, rank, RSD.
method_report wpm_report(const decision_matrix& m, const weight_vector& w);

struct method_comparison {
  method_report saw;
  method_report wpm;
  // Method with the strictly larger RSD; empty when either RSD is undefined
  // or they tie.
  std::optional<std::string> more_discriminating;
};

// Runs SAW (normalize + weighted sum) and WPM (ideal ratios) on the same
// matrix and reports both rankings plus their RSDs.
method_comparison compare_methods(const decision_matrix& m,
                                  const weight_vector& w);

}  // namespace vho::madm
