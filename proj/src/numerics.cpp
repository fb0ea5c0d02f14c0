#include "tlcp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tlcp/rng.hpp"

namespace tlcp::numerics {

namespace {

std::vector<double> gauss_solve(DenseMatrix& a, std::vector<double>& b) {
  const int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < 1e-300) return {};  // singular
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    const double inv = 1.0 / a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) * inv;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

}  // namespace

std::vector<double> solve_linear(DenseMatrix a, std::vector<double> b) {
  if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows()) {
    throw InvalidInputError("solve_linear: shape mismatch");
  }
  DenseMatrix a0 = a;
  std::vector<double> b0 = b;
  auto x = gauss_solve(a, b);
  if (!x.empty()) return x;
  // Singular subproblem: regularize minimally and retry.
  double scale = 0.0;
  for (int i = 0; i < a0.rows(); ++i) scale = std::max(scale, std::abs(a0(i, i)));
  const double ridge = std::max(scale, 1.0) * 1e-12;
  for (int i = 0; i < a0.rows(); ++i) a0(i, i) += ridge;
  x = gauss_solve(a0, b0);
  if (x.empty()) throw NumericError("solve_linear: singular system");
  return x;
}

SymEigen eigen_symmetric(const DenseMatrix& s) {
  if (s.rows() != s.cols()) throw InvalidInputError("eigen_symmetric: not square");
  const int n = s.rows();
  DenseMatrix a = s;
  DenseMatrix v = DenseMatrix::identity(n);

  auto off_diag_sq = [&]() {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) sum += a(i, j) * a(i, j);
    return sum;
  };

  const double scale = std::sqrt(std::max(a.frobenius_sq(), 1e-300));
  const double tol = 1e-28 * scale * scale;
  for (int sweep = 0; sweep < 100 && off_diag_sq() > tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = c * aip - sn * aiq;
          a(i, q) = sn * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const double apj = a(p, j);
          const double aqj = a(q, j);
          a(p, j) = c * apj - sn * aqj;
          a(q, j) = sn * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - sn * viq;
          v(i, q) = sn * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });

  SymEigen result;
  result.values.resize(n);
  result.vectors = DenseMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    result.values[j] = a(order[j], order[j]);
    for (int i = 0; i < n; ++i) result.vectors(i, j) = v(i, order[j]);
  }
  return result;
}

PcaModel pca_fit(const DenseMatrix& data, int k) {
  const int m = data.rows();
  const int d = data.cols();
  if (m < 2) throw InvalidInputError("pca_fit: need at least 2 samples");
  if (k < 1 || k > std::min(m - 1, d)) {
    throw InvalidInputError("pca_fit: k=" + std::to_string(k) +
                            " out of range [1, " + std::to_string(std::min(m - 1, d)) + "]");
  }

  PcaModel model;
  model.mean.assign(d, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < d; ++j) model.mean[j] += data(i, j);
  for (double& v : model.mean) v /= m;

  DenseMatrix cov(d, d);
  for (int i = 0; i < m; ++i) {
    for (int a = 0; a < d; ++a) {
      const double da = data(i, a) - model.mean[a];
      for (int b = a; b < d; ++b) {
        cov(a, b) += da * (data(i, b) - model.mean[b]);
      }
    }
  }
  const double denom = 1.0 / (m - 1);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      cov(a, b) *= denom;
      cov(b, a) = cov(a, b);
    }

  SymEigen eig = eigen_symmetric(cov);
  model.components = DenseMatrix(k, d);
  model.explained_variance.resize(k);
  for (int c = 0; c < k; ++c) {
    model.explained_variance[c] = std::max(eig.values[c], 0.0);
    for (int j = 0; j < d; ++j) model.components(c, j) = eig.vectors(j, c);
    // Deterministic sign: first nonzero coordinate positive.
    for (int j = 0; j < d; ++j) {
      const double v = model.components(c, j);
      if (std::abs(v) > 1e-12) {
        if (v < 0) {
          for (int jj = 0; jj < d; ++jj) model.components(c, jj) = -model.components(c, jj);
        }
        break;
      }
    }
  }
  return model;
}

DenseMatrix pca_transform(const PcaModel& model, const DenseMatrix& data) {
  if (data.cols() != model.input_dim()) {
    throw InvalidInputError("pca_transform: expected " +
                            std::to_string(model.input_dim()) + " columns, got " +
                            std::to_string(data.cols()));
  }
  const int k = model.n_components();
  DenseMatrix out(data.rows(), k);
  for (int i = 0; i < data.rows(); ++i) {
    auto row = pca_transform_row(model, data.row(i));
    for (int c = 0; c < k; ++c) out(i, c) = row[c];
  }
  return out;
}

std::vector<double> pca_transform_row(const PcaModel& model, std::span<const double> x) {
  const int d = model.input_dim();
  if (static_cast<int>(x.size()) != d) {
    throw InvalidInputError("pca_transform_row: dimension mismatch");
  }
  const int k = model.n_components();
  std::vector<double> out(k, 0.0);
  for (int c = 0; c < k; ++c) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += model.components(c, j) * (x[j] - model.mean[j]);
    out[c] = s;
  }
  return out;
}

namespace {

int nearest_centroid(const DenseMatrix& centroids, std::span<const double> point) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int c = 0; c < centroids.rows(); ++c) {
    const double d = squared_distance(centroids.row(c), point);
    if (d < best_d) {  // strict: ties keep the lowest index
      best_d = d;
      best = c;
    }
  }
  return best;
}

}  // namespace

KMeansModel kmeans_fit(const DenseMatrix& data, int k, uint64_t seed, int max_iter) {
  const int m = data.rows();
  const int d = data.cols();
  if (k < 1 || k > m) {
    throw InvalidInputError("kmeans_fit: k=" + std::to_string(k) +
                            " out of range [1, " + std::to_string(m) + "]");
  }
  if (max_iter < 1) throw InvalidInputError("kmeans_fit: max_iter must be >= 1");

  Rng rng(seed);
  DenseMatrix centroids(k, d);

  // k-means++ seeding.
  std::vector<double> dist_sq(m, std::numeric_limits<double>::infinity());
  {
    const int first = rng.uniform_int(m);
    for (int j = 0; j < d; ++j) centroids(0, j) = data(first, j);
    for (int i = 0; i < m; ++i) dist_sq[i] = squared_distance(data.row(i), centroids.row(0));
    for (int c = 1; c < k; ++c) {
      double total = 0.0;
      for (double v : dist_sq) total += v;
      int chosen = -1;
      if (total > 0.0) {
        const double r = rng.uniform01() * total;
        double cum = 0.0;
        for (int i = 0; i < m; ++i) {
          cum += dist_sq[i];
          if (r < cum) {
            chosen = i;
            break;
          }
        }
        if (chosen < 0) {
          for (int i = m - 1; i >= 0; --i) {
            if (dist_sq[i] > 0.0) {
              chosen = i;
              break;
            }
          }
        }
      }
      if (chosen < 0) chosen = rng.uniform_int(m);  // all points coincide
      for (int j = 0; j < d; ++j) centroids(c, j) = data(chosen, j);
      for (int i = 0; i < m; ++i) {
        dist_sq[i] = std::min(dist_sq[i], squared_distance(data.row(i), centroids.row(c)));
      }
    }
  }

  std::vector<int> assign(m, -1);
  std::vector<int> counts(k, 0);
  KMeansModel model;

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    bool changed = false;
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < m; ++i) {
      const int c = nearest_centroid(centroids, data.row(i));
      if (c != assign[i]) {
        assign[i] = c;
        changed = true;
      }
      ++counts[c];
    }

    // Re-seed empty clusters to the point farthest from its assigned centroid.
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      int far = -1;
      double far_d = -1.0;
      for (int i = 0; i < m; ++i) {
        if (counts[assign[i]] <= 1) continue;  // keep donor clusters non-empty
        const double dd = squared_distance(data.row(i), centroids.row(assign[i]));
        if (dd > far_d) {
          far_d = dd;
          far = i;
        }
      }
      if (far < 0) continue;  // every cluster is a singleton
      --counts[assign[far]];
      assign[far] = c;
      counts[c] = 1;
      changed = true;
    }

    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      for (int j = 0; j < d; ++j) centroids(c, j) = 0.0;
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < d; ++j) centroids(assign[i], j) += data(i, j);
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      for (int j = 0; j < d; ++j) centroids(c, j) /= counts[c];
    }

    double inertia = 0.0;
    for (int i = 0; i < m; ++i) {
      inertia += squared_distance(data.row(i), centroids.row(assign[i]));
    }
    model.inertia_trace.push_back(inertia);

    if (!changed) {
      ++iter;
      break;
    }
  }

  model.centroids = std::move(centroids);
  model.iterations_run = iter;
  double inertia = 0.0;
  for (int i = 0; i < m; ++i) {
    inertia += squared_distance(data.row(i), model.centroids.row(nearest_centroid(model.centroids, data.row(i))));
  }
  model.inertia = inertia;
  return model;
}

int kmeans_assign(const KMeansModel& model, std::span<const double> point) {
  if (static_cast<int>(point.size()) != model.centroids.cols()) {
    throw InvalidInputError("kmeans_assign: dimension mismatch");
  }
  return nearest_centroid(model.centroids, point);
}

}  // namespace tlcp::numerics
