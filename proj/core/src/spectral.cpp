#include "privclust/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "privclust/errors.hpp"
#include "privclust/geometry.hpp"
#include "privclust/kmeans.hpp"

namespace privclust {

double median_pairwise_distance(const DataMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<double> dist;
  dist.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) dist.push_back(euclidean_distance(m.row(i), m.row(j)));
  }
  if (dist.empty() || *std::max_element(dist.begin(), dist.end()) == 0.0) {
    throw DegenerateInput("spectral: all points are identical, affinity is undefined");
  }
  std::sort(dist.begin(), dist.end());
  const std::size_t h = dist.size() / 2;
  const double median = dist.size() % 2 ? dist[h] : 0.5 * (dist[h - 1] + dist[h]);
  if (median > 0.0) return median;
  double sum = 0.0;
  std::size_t count = 0;
  for (const double v : dist) {
    if (v > 0.0) {
      sum += v;
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

SymmetricMatrix gaussian_affinity(const DataMatrix& m, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("gaussian_affinity: sigma must be positive");
  const std::size_t n = m.rows();
  const double scale = 1.0 / (2.0 * sigma * sigma);
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = a(j, i) = std::exp(-squared_distance(m.row(i), m.row(j)) * scale);
    }
  }
  return a;
}

SymmetricMatrix normalized_laplacian(const SymmetricMatrix& affinity) {
  const std::size_t n = affinity.size;
  std::vector<double> inv_sqrt_degree(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double deg = 0.0;
    for (std::size_t j = 0; j < n; ++j) deg += affinity(i, j);
    inv_sqrt_degree[i] = deg > 0.0 ? 1.0 / std::sqrt(deg) : 0.0;
  }
  SymmetricMatrix l(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      l(i, j) = -affinity(i, j) * inv_sqrt_degree[i] * inv_sqrt_degree[j];
    }
    l(i, i) += 1.0;
  }
  return l;
}

ClusteringResult spectral(const DataMatrix& m, const ClustererConfig& config) {
  detail::require_k_within_rows(m, config.k, "spectral");
  const std::size_t n = m.rows();
  const std::size_t k = config.k;
  const double sigma =
      config.spectral.sigma > 0.0 ? config.spectral.sigma : median_pairwise_distance(m);

  SymmetricMatrix operator_matrix = normalized_laplacian(gaussian_affinity(m, sigma));
  // Eigenvectors of D^{-1/2} A D^{-1/2} = I - L, largest first.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      operator_matrix(i, j) = (i == j ? 1.0 : 0.0) - operator_matrix(i, j);
    }
  }
  const EigenDecomposition eig = symmetric_eigen(std::move(operator_matrix));

  DataMatrix embedding(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      embedding(i, j) = eig.vectors[j][i];
      norm2 += embedding(i, j) * embedding(i, j);
    }
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t j = 0; j < k; ++j) embedding(i, j) *= inv;
    }
  }

  ClusteringResult embedded = kmeans(embedding, config);
  ClusteringResult result;
  result.labels = std::move(embedded.labels);
  result.centroids = detail::cluster_means(m, result.labels, k);
  result.objective = embedded.objective;
  result.objective_trace = std::move(embedded.objective_trace);
  result.iterations = embedded.iterations;
  result.seed = config.seed;
  return result;
}

}  // namespace privclust
