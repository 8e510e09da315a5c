#include "privclust/kmeans.hpp"

#include <string>

#include "privclust/errors.hpp"
#include "privclust/geometry.hpp"
#include "privclust/random.hpp"

namespace privclust {

namespace {

Labels assign(const DataMatrix& m, const std::vector<Point>& centroids) {
  Labels labels(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) labels[i] = detail::nearest(m.row(i), centroids);
  return labels;
}

}  // namespace

double within_cluster_sse(const DataMatrix& m, const Labels& labels,
                          const std::vector<Point>& centroids) {
  double sse = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) sse += squared_distance(m.row(i), centroids[labels[i]]);
  return sse;
}

ClusteringResult kmeans_from(const DataMatrix& m, std::vector<Point> initial,
                             const ClustererConfig& config) {
  const std::size_t k = initial.size();
  detail::require_k_within_rows(m, k, "kmeans");
  for (const Point& c : initial) {
    if (c.size() != m.cols()) throw InvalidArgument("kmeans: initial centroid dimension mismatch");
  }
  const std::size_t max_iter = std::max<std::size_t>(1, config.kmeans.max_iter);

  ClusteringResult result;
  result.seed = config.seed;
  std::vector<Point> centroids = std::move(initial);
  Labels labels = assign(m, centroids);
  detail::fill_empty_clusters(m, labels, centroids);

  bool converged = false;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    centroids = detail::cluster_means(m, labels, k);
    result.objective_trace.push_back(within_cluster_sse(m, labels, centroids));
    result.iterations = it;
    Labels next = assign(m, centroids);
    detail::fill_empty_clusters(m, next, centroids);
    if (next == labels) {
      converged = true;
      break;
    }
    labels = std::move(next);
  }
  centroids = detail::cluster_means(m, labels, k);
  if (!converged) result.objective_trace.push_back(within_cluster_sse(m, labels, centroids));
  result.objective = result.objective_trace.back();
  result.labels = std::move(labels);
  result.centroids = std::move(centroids);
  detail::canonicalize_result(result);
  return result;
}

ClusteringResult kmeans(const DataMatrix& m, const ClustererConfig& config) {
  detail::require_k_within_rows(m, config.k, "kmeans");
  Rng rng(config.seed);
  const auto picks = rng.sample_without_replacement(m.rows(), config.k);
  std::vector<Point> initial;
  initial.reserve(config.k);
  for (const std::size_t i : picks) initial.push_back(m.row_point(i));
  return kmeans_from(m, std::move(initial), config);
}

}  // namespace privclust
