#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tlcp/matrix.hpp"

namespace tlcp::numerics {

// Solves A x = b by Gaussian elimination with partial pivoting.
// A near-singular system gets a tiny diagonal ridge before giving up.
std::vector<double> solve_linear(DenseMatrix a, std::vector<double> b);

struct SymEigen {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column j pairs with values[j]
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix (d <= a few dozen).
SymEigen eigen_symmetric(const DenseMatrix& s);

struct PcaModel {
  std::vector<double> mean;           // d
  DenseMatrix components;             // k x d, rows orthonormal
  std::vector<double> explained_variance;  // k, non-increasing

  int input_dim() const { return static_cast<int>(mean.size()); }
  int n_components() const { return components.rows(); }
};

// Principal axes of mean-centered data via eigendecomposition of the sample
// covariance (1/(m-1)). Sign convention: first nonzero coordinate of each
// component is positive. Zero-variance data yields an axis-aligned basis with
// zero explained variance.
PcaModel pca_fit(const DenseMatrix& data, int k);

DenseMatrix pca_transform(const PcaModel& model, const DenseMatrix& data);
std::vector<double> pca_transform_row(const PcaModel& model, std::span<const double> x);

struct KMeansModel {
  DenseMatrix centroids;  // k x d
  double inertia = 0.0;
  int iterations_run = 0;
  std::vector<double> inertia_trace;  // per Lloyd iteration, non-increasing
};

// Lloyd's algorithm with k-means++ seeding. Deterministic for a fixed seed:
// ties break to the lowest index and empty clusters re-seed to the farthest
// point from its assigned centroid.
KMeansModel kmeans_fit(const DenseMatrix& data, int k, uint64_t seed, int max_iter);

int kmeans_assign(const KMeansModel& model, std::span<const double> point);

}  // namespace tlcp::numerics
