#include "tlcp/assessment.hpp"

#include <algorithm>
#include <cmath>

namespace tlcp::assessment {

namespace {

// Saaty random consistency index, indexed by matrix order (extended table).
constexpr double kRandomIndex[16] = {0.0,  0.0,  0.0,  0.58, 0.90, 1.12,
                                     1.24, 1.32, 1.41, 1.45, 1.49, 1.51,
                                     1.48, 1.56, 1.57, 1.59};

}  // namespace

UnitScore score_unit(std::span<const IndicatorDeduction> deductions) {
  UnitScore result;
  if (deductions.empty()) return result;
  result.unit_index = deductions.front().unit_index;
  for (const auto& d : deductions) {
    if (d.unit_index != result.unit_index) {
      throw InvalidInputError("score_unit: mixed unit indices " +
                              std::to_string(result.unit_index) + " and " +
                              std::to_string(d.unit_index));
    }
    if (!std::isfinite(d.weight) || !std::isfinite(d.demerit) || d.weight < 0.0 ||
        d.demerit < 0.0) {
      throw InvalidInputError("score_unit: weight and demerit must be finite and non-negative");
    }
    result.score += d.weight * d.demerit;
  }
  return result;
}

double score_line(std::span<const double> unit_scores, std::span<const double> weights) {
  if (unit_scores.size() != kNumUnits || weights.size() != kNumUnits) {
    throw InvalidInputError("score_line: expected exactly 8 unit scores and 8 weights");
  }
  double weight_sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w)) throw InvalidInputError("score_line: non-finite weight");
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > 1e-6) {
    throw InvalidInputError("score_line: weights sum to " + std::to_string(weight_sum) +
                            ", expected 1");
  }
  double deduction = 0.0;
  for (size_t i = 0; i < kNumUnits; ++i) {
    if (!std::isfinite(unit_scores[i])) {
      throw InvalidInputError("score_line: non-finite unit score");
    }
    deduction += weights[i] * unit_scores[i];
  }
  return std::clamp(100.0 - deduction, 0.0, 100.0);
}

GradeLabel grade_of(double score) {
  if (!std::isfinite(score) || score < 0.0 || score > 100.0) {
    throw InvalidInputError("grade_of: score must be in [0, 100]");
  }
  if (score > 95.0) return GradeLabel::Normal;
  if (score > 85.0) return GradeLabel::Attention;
  if (score > 75.0) return GradeLabel::Abnormal;
  return GradeLabel::Serious;
}

LineAssessment assess_line(std::span<const IndicatorDeduction> deductions,
                           std::span<const double> weights) {
  std::array<std::vector<IndicatorDeduction>, kNumUnits> by_unit;
  for (const auto& d : deductions) {
    if (d.unit_index < 1 || d.unit_index > kNumUnits) {
      throw InvalidInputError("assess_line: unit index " + std::to_string(d.unit_index) +
                              " outside 1..8");
    }
    by_unit[d.unit_index - 1].push_back(d);
  }
  LineAssessment out;
  std::array<double, kNumUnits> scores{};
  for (int u = 0; u < kNumUnits; ++u) {
    UnitScore us = score_unit(by_unit[u]);
    us.unit_index = u + 1;
    out.unit_scores[u] = us;
    scores[u] = us.score;
  }
  out.score = score_line(scores, weights);
  out.grade = grade_of(out.score);
  return out;
}

void AhpMatrix::validate() const {
  const int n = entries.rows();
  if (entries.cols() != n) throw InvalidInputError("ahp: matrix must be square");
  if (n < 2 || n > 15) throw InvalidInputError("ahp: order must be in 2..15");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = entries(i, j);
      if (!std::isfinite(v) || v <= 0.0) {
        throw InvalidInputError("ahp: entries must be positive and finite");
      }
      if (std::abs(entries(i, j) * entries(j, i) - 1.0) > 1e-9) {
        throw InvalidInputError("ahp: matrix is not reciprocal at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
    if (std::abs(entries(i, i) - 1.0) > 1e-9) {
      throw InvalidInputError("ahp: diagonal must be 1");
    }
  }
}

AhpResult ahp_weights(const AhpMatrix& matrix) {
  matrix.validate();
  const int n = matrix.size();
  std::vector<double> w(n, 1.0 / n);
  std::vector<double> next(n);
  for (int iter = 0; iter < 1000; ++iter) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += matrix.entries(i, j) * w[j];
      next[i] = s;
    }
    double norm1 = 0.0;
    for (double v : next) norm1 += v;
    for (double& v : next) v /= norm1;
    double delta = 0.0;
    for (int i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - w[i]));
    w = next;
    if (delta < 1e-14) break;
  }

  AhpResult result;
  result.weights = w;
  double lambda = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += matrix.entries(i, j) * w[j];
    lambda += s / w[i];
  }
  result.lambda_max = lambda / n;
  result.consistency_index = (result.lambda_max - n) / (n - 1);
  result.consistency_ratio =
      kRandomIndex[n] > 0.0 ? result.consistency_index / kRandomIndex[n] : 0.0;
  return result;
}

}  // namespace tlcp::assessment
