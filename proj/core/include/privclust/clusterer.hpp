#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "privclust/labels.hpp"
#include "privclust/matrix.hpp"

namespace privclust {

struct ClusteringResult {
  // Canonical (first-seen) ids in [0, k); every id occurs at least once.
  Labels labels;
  // centroids[j] is the representative of cluster j in the input space.
  std::vector<Point> centroids;
  // Within-cluster SSE for K-Means, log-likelihood for EM; see each algorithm.
  double objective = 0.0;
  // Objective after every iteration, in order.
  std::vector<double> objective_trace;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;

  std::size_t k() const noexcept { return centroids.size(); }
};

struct KMeansParams {
  std::size_t max_iter = 100;
};

struct EmParams {
  std::size_t max_iter = 200;
  double tolerance = 1e-6;
  double variance_floor = 1e-6;
};

struct SpectralParams {
  // Gaussian affinity scale; <= 0 selects the median pairwise distance.
  double sigma = 0.0;
};

struct SomParams {
  std::size_t epochs = 500;
  double learning_rate_start = 0.5;
  double learning_rate_end = 0.01;
  // <= 0 selects half the longer grid side.
  double radius_start = 0.0;
  double radius_end = 0.5;
  // Grid used by som2k; som() always uses a 1 x k grid.
  std::size_t grid_rows = 5;
  std::size_t grid_cols = 5;
};

struct ClustererConfig {
  std::size_t k = 2;
  std::uint64_t seed = 0;
  KMeansParams kmeans;
  EmParams em;
  SpectralParams spectral;
  SomParams som;
};

enum class Algorithm { KMeans, Em, Spectral, Som, Som2k };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

// Dispatches to kmeans / em_gmm / spectral / som / som2k.
ClusteringResult run_clusterer(Algorithm algorithm, const DataMatrix& m,
                               const ClustererConfig& config);

struct ClustererSpec {
  Algorithm algorithm = Algorithm::KMeans;
  ClustererConfig config;
};

namespace detail {

// Shared post-processing: relabel in first-seen order and permute centroids
// to match. Returns the map from old to new cluster ids.
std::vector<std::size_t> canonicalize_result(ClusteringResult& result);

// Index of the nearest centroid; ties go to the lowest index.
std::size_t nearest(std::span<const double> x, const std::vector<Point>& centroids);

// Moves instances into empty clusters until every id in [0, k) is used.
// Each empty cluster receives the instance (from a cluster with more than one
// member) farthest from the centroid of its current cluster. Returns the
// number of moves.
std::size_t fill_empty_clusters(const DataMatrix& m, Labels& labels,
                                std::vector<Point>& centroids);

std::vector<Point> cluster_means(const DataMatrix& m, const Labels& labels, std::size_t k);

void require_k_within_rows(const DataMatrix& m, std::size_t k, std::string_view who);

}  // namespace detail

}  // namespace privclust
