#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tlcp/matrix.hpp"

namespace tlcp::imputation {

// Feature matrix with an observation mask. Unobserved cells may hold any
// sentinel (NaN included); only masked-true entries are ever read.
struct ObservedMatrix {
  DenseMatrix values;          // m x n
  std::vector<uint8_t> mask;   // row-major, 1 = observed

  int rows() const { return values.rows(); }
  int cols() const { return values.cols(); }
  bool observed(int i, int j) const {
    return mask[static_cast<size_t>(i) * values.cols() + j] != 0;
  }

  // Checks shape, finiteness of observed entries, and that every row and
  // column has at least one observation (otherwise it is unrecoverable).
  void validate() const;
};

// Low-rank factors: reconstruction (i,j) = dot(column i of U, column j of V).
struct FactorPair {
  DenseMatrix u;  // r x m
  DenseMatrix v;  // r x n
  int rank = 0;
  double lambda = 0.0;
  std::vector<double> objective_trace;  // J at init, then once per ALS sweep

  double reconstruct(int i, int j) const {
    double s = 0.0;
    for (int r = 0; r < rank; ++r) s += u(r, i) * v(r, j);
    return s;
  }
};

// Alternating least squares over observed entries:
//   J = sum_obs (X_ij - U_i^T V_j)^2 + (lambda/2)(|U|_F^2 + |V|_F^2)
// U starts from a seeded uniform(-0.1, 0.1) draw; stops when the relative
// objective change drops below tol or after max_iter sweeps.
FactorPair factorize(const ObservedMatrix& obs, int rank, double lambda,
                     int max_iter, double tol, uint64_t seed);

double objective(const ObservedMatrix& obs, const FactorPair& factors);

// Observed entries are preserved verbatim; missing cells get the low-rank
// reconstruction. Real-valued output for inspection.
DenseMatrix impute(const ObservedMatrix& obs, const FactorPair& factors);

struct CodeRange {
  int lo = 0;
  int hi = 0;
};

// Like impute, but missing cells are rounded to the nearest integer code and
// clamped to the column's range.
DenseMatrix impute_codes(const ObservedMatrix& obs, const FactorPair& factors,
                         std::span<const CodeRange> column_ranges);

// Coordinates of a new row against the frozen V (fold-in least squares).
std::vector<double> fold_in_row(const FactorPair& factors,
                                std::span<const double> values,
                                std::span<const uint8_t> mask);

}  // namespace tlcp::imputation
