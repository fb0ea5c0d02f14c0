#pragma once

#include <array>
#include <span>
#include <vector>

#include "tlcp/matrix.hpp"
#include "tlcp/types.hpp"

namespace tlcp::assessment {

inline constexpr int kNumUnits = 8;

// Canonical level-1 unit ordering; the weight vector is assigned positionally.
inline constexpr std::array<const char*, kNumUnits> kUnitNames = {
    "foundation", "towers",    "fittings",  "insulators",
    "conductors", "lightning", "ancillary", "access_environment"};

// Default unit weight vector (editable through the pipeline config).
inline constexpr std::array<double, kNumUnits> kDefaultUnitWeights = {
    0.062, 0.198, 0.198, 0.110, 0.110, 0.062, 0.062, 0.198};

struct IndicatorDeduction {
  int unit_index = 0;       // 1..8
  int indicator_index = 0;  // 1..p_i
  double weight = 0.0;      // >= 0
  double demerit = 0.0;     // >= 0 points
};

struct UnitScore {
  int unit_index = 0;
  double score = 0.0;
};

struct LineAssessment {
  double score = 0.0;  // in [0, 100]
  GradeLabel grade = GradeLabel::Normal;
  std::array<UnitScore, kNumUnits> unit_scores{};
};

// Weighted sum of one unit's demerits. All deductions must share a unit index.
UnitScore score_unit(std::span<const IndicatorDeduction> deductions);

// 100 minus the weighted unit scores, clamped to [0, 100].
// Exactly 8 scores and 8 weights; weights must sum to 1 within 1e-6.
double score_line(std::span<const double> unit_scores, std::span<const double> weights);

// (95,100] Normal, (85,95] Attention, (75,85] Abnormal, [0,75] Serious.
GradeLabel grade_of(double score);

// Groups deductions by unit (units without deductions score 0) and grades the line.
LineAssessment assess_line(std::span<const IndicatorDeduction> deductions,
                           std::span<const double> weights);

// Pairwise importance-ratio judgment matrix. Entries positive, reciprocal
// within 1e-9, unit diagonal; 2 <= n <= 15.
struct AhpMatrix {
  DenseMatrix entries;
  void validate() const;
  int size() const { return entries.rows(); }
};

struct AhpResult {
  std::vector<double> weights;  // principal eigenvector, 1-norm = 1
  double lambda_max = 0.0;
  double consistency_index = 0.0;
  double consistency_ratio = 0.0;  // reported, not enforced
};

// Principal eigenvector by power iteration plus Saaty consistency ratio.
AhpResult ahp_weights(const AhpMatrix& matrix);

}  // namespace tlcp::assessment
