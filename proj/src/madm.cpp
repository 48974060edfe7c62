#include "vho/madm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace vho::madm {

const char* direction_name(direction d) {
  return d == direction::benefit ? "benefit" : "cost";
}

weight_check validate_weights(std::span<const double> weights) {
  weight_check result;
  double sum = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] < 0.0 || !std::isfinite(weights[j])) {
      result.state = weight_check::status::negative_weight;
      result.offending_index = j;
      return result;
    }
    sum += weights[j];
  }
  result.sum = sum;
  if (weights.empty() || std::abs(sum - 1.0) > weight_sum_tolerance) {
    result.state = weight_check::status::sum_not_one;
  }
  return result;
}

weight_vector::weight_vector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  weight_check check = validate_weights(weights_);
  if (check.state == weight_check::status::negative_weight) {
    std::ostringstream msg;
    msg << "weight " << check.offending_index << " is negative or not finite";
    throw error(errc::negative_weight, msg.str());
  }
  if (check.state == weight_check::status::sum_not_one) {
    std::ostringstream msg;
    msg << "weights sum to " << check.sum << ", expected 1";
    throw error(errc::sum_not_one, msg.str());
  }
}

decision_matrix::decision_matrix(std::vector<criterion_spec> criteria,
                                 std::vector<std::string> alternatives,
                                 const std::vector<std::vector<double>>& rows)
    : criteria_(std::move(criteria)), alternatives_(std::move(alternatives)) {
  if (criteria_.empty()) {
    throw error(errc::invalid_argument, "matrix needs at least one criterion");
  }
  if (alternatives_.empty() || rows.size() != alternatives_.size()) {
    throw error(errc::invalid_argument,
                "matrix needs one row per alternative, at least one");
  }
  std::set<std::string> names;
  for (const auto& c : criteria_) {
    if (c.name.empty() || !names.insert(c.name).second) {
      throw error(errc::invalid_argument,
                  "criterion names must be non-empty and unique");
    }
  }
  std::set<std::string> ids;
  for (const auto& id : alternatives_) {
    if (id.empty() || !ids.insert(id).second) {
      throw error(errc::duplicate_id,
                  "alternative ids must be non-empty and unique: '" + id + "'");
    }
  }
  values_.reserve(alternatives_.size() * criteria_.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != criteria_.size()) {
      std::ostringstream msg;
      msg << "row " << i << " has " << rows[i].size() << " values, expected "
          << criteria_.size();
      throw error(errc::dimension_mismatch, msg.str());
    }
    for (double v : rows[i]) {
      if (!std::isfinite(v) || v <= 0.0) {
        std::ostringstream msg;
        msg << "matrix value " << v << " in row '" << alternatives_[i]
            << "' must be finite and strictly positive";
        throw error(errc::non_positive_value, msg.str());
      }
      values_.push_back(v);
    }
  }
}

decision_matrix normalize(const decision_matrix& m) {
  const std::size_t n = m.alternative_count();
  const std::size_t cols = m.criterion_count();
  std::vector<std::vector<double>> rows(n, std::vector<double>(cols));
  std::vector<criterion_spec> criteria = m.criteria();
  for (std::size_t j = 0; j < cols; ++j) {
    double best = m.at(0, j);
    for (std::size_t i = 1; i < n; ++i) {
      if (criteria[j].dir == direction::benefit) {
        best = std::max(best, m.at(i, j));
      } else {
        best = std::min(best, m.at(i, j));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      rows[i][j] = criteria[j].dir == direction::benefit ? m.at(i, j) / best
                                                         : best / m.at(i, j);
    }
    criteria[j].dir = direction::benefit;
  }
  return decision_matrix(std::move(criteria), m.alternatives(), rows);
}

std::vector<double> saw_scores(const decision_matrix& normalized,
                               const weight_vector& w) {
  if (w.size() != normalized.criterion_count()) {
    throw error(errc::dimension_mismatch,
                "weight count does not match criterion count");
  }
  std::vector<double> scores(normalized.alternative_count());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < normalized.criterion_count(); ++j) {
      s += w[j] * normalized.at(i, j);
    }
    scores[i] = s;
  }
  return scores;
}

namespace {

// Weighted log sum: benefit criteria enter with +w, cost criteria with -w.
double weighted_log(std::span<const double> row, const weight_vector& w,
                    std::span<const criterion_spec> specs) {
  double acc = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double sign = specs[j].dir == direction::benefit ? 1.0 : -1.0;
    acc += sign * w[j] * std::log(row[j]);
  }
  return acc;
}

}  // namespace

double wpm_value(std::span<const double> row, const weight_vector& w,
                 std::span<const criterion_spec> specs) {
  if (row.size() != w.size() || specs.size() != w.size()) {
    throw error(errc::dimension_mismatch,
                "row, weights and criteria must have equal length");
  }
  for (double v : row) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw error(errc::non_positive_value,
                  "weighted product needs strictly positive values");
    }
  }
  return std::exp(weighted_log(row, w, specs));
}

std::vector<double> ideal_alternative(const decision_matrix& m) {
  std::vector<double> ideal(m.criterion_count());
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    double best = m.at(0, j);
    for (std::size_t i = 1; i < m.alternative_count(); ++i) {
      if (m.criteria()[j].dir == direction::benefit) {
        best = std::max(best, m.at(i, j));
      } else {
        best = std::min(best, m.at(i, j));
      }
    }
    ideal[j] = best;
  }
  return ideal;
}

std::vector<double> wpm_ratios(const decision_matrix& m,
                               const weight_vector& w) {
  if (w.size() != m.criterion_count()) {
    throw error(errc::dimension_mismatch,
                "weight count does not match criterion count");
  }
  const std::vector<double> ideal = ideal_alternative(m);
  const double log_ideal = weighted_log(ideal, w, m.criteria());
  std::vector<double> ratios(m.alternative_count());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    // exp of the log difference keeps the ratio exact at 1 when the row is
    // the ideal alternative and stable when individual products underflow.
    ratios[i] = std::exp(weighted_log(m.row(i), w, m.criteria()) - log_ideal);
  }
  return ratios;
}

ranking rank(std::span<const std::string> alternatives,
             std::span<const double> scores) {
  if (alternatives.size() != scores.size()) {
    throw error(errc::dimension_mismatch,
                "alternatives and scores must have equal length");
  }
  ranking r;
  r.scores.assign(scores.begin(), scores.end());
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  r.order_ids.reserve(r.order.size());
  for (std::size_t idx : r.order) r.order_ids.push_back(alternatives[idx]);
  return r;
}

double rsd(std::span<const double> scores) {
  if (scores.size() < 2) {
    throw error(errc::too_few_scores,
                "relative standard deviation needs at least two scores");
  }
  const double mean =
      std::accumulate(scores.begin(), scores.end(), 0.0) / scores.size();
  if (mean == 0.0) {
    throw error(errc::zero_mean,
                "relative standard deviation undefined for zero mean");
  }
  double ss = 0.0;
  for (double v : scores) ss += (v - mean) * (v - mean);
  const double sample_std = std::sqrt(ss / (scores.size() - 1));
  return sample_std / mean * 100.0;
}

namespace {

method_report make_report(const decision_matrix& m,
                          std::vector<double> scores) {
  method_report rep;
  rep.scores = std::move(scores);
  rep.ranked = rank(m.alternatives(), rep.scores);
  rep.winner = rep.ranked.order_ids.front();
  try {
    rep.rsd_pct = rsd(rep.scores);
  } catch (const error& e) {
    rep.rsd_error = e.code();
  }
  return rep;
}

}  // namespace

method_report saw_report(const decision_matrix& m, const weight_vector& w) {
  return make_report(m, saw_scores(normalize(m), w));
}

method_report wpm_report(const decision_matrix& m, const weight_vector& w) {
  return make_report(m, wpm_ratios(m, w));
}

method_comparison compare_methods(const decision_matrix& m,
                                  const weight_vector& w) {
  method_comparison cmp;
  cmp.saw = saw_report(m, w);
  cmp.wpm = wpm_report(m, w);
  if (cmp.saw.rsd_pct && cmp.wpm.rsd_pct && *cmp.saw.rsd_pct != *cmp.wpm.rsd_pct) {
    cmp.more_discriminating = *cmp.wpm.rsd_pct > *cmp.saw.rsd_pct ? "wpm" : "saw";
  }
  return cmp;
}

}  // namespace vho::madm
