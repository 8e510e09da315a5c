#include "privclust/som.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "privclust/errors.hpp"
#include "privclust/geometry.hpp"
#include "privclust/kmeans.hpp"

namespace privclust {

namespace {

std::vector<Point> codebook_points(const DataMatrix& codebook) {
  std::vector<Point> nodes;
  nodes.reserve(codebook.rows());
  for (std::size_t r = 0; r < codebook.rows(); ++r) nodes.push_back(codebook.row_point(r));
  return nodes;
}

std::size_t best_matching_node(std::span<const double> x, const DataMatrix& codebook) {
  std::size_t best = 0;
  double best_d = squared_distance(x, codebook.row(0));
  for (std::size_t j = 1; j < codebook.rows(); ++j) {
    const double d = squared_distance(x, codebook.row(j));
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return best;
}

}  // namespace

DataMatrix train_som(const DataMatrix& m, SomGrid grid, const SomParams& params, Rng& rng) {
  const std::size_t n = m.rows();
  const std::size_t nodes = grid.nodes();
  if (n == 0 || nodes == 0) throw InvalidArgument("train_som: empty data or grid");

  DataMatrix codebook(nodes, m.cols());
  if (nodes <= n) {
    const auto picks = rng.sample_without_replacement(n, nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
      const auto src = m.row(picks[j]);
      std::copy(src.begin(), src.end(), codebook.row(j).begin());
    }
  } else {
    for (std::size_t j = 0; j < nodes; ++j) {
      const auto src = m.row(rng.index(n));
      std::copy(src.begin(), src.end(), codebook.row(j).begin());
    }
  }

  // Squared grid distances between every pair of nodes.
  std::vector<double> grid_d2(nodes * nodes);
  for (std::size_t a = 0; a < nodes; ++a) {
    for (std::size_t b = 0; b < nodes; ++b) {
      const double dr = static_cast<double>(a / grid.cols) - static_cast<double>(b / grid.cols);
      const double dc = static_cast<double>(a % grid.cols) - static_cast<double>(b % grid.cols);
      grid_d2[a * nodes + b] = dr * dr + dc * dc;
    }
  }

  const double r0 = params.radius_start > 0.0
                        ? params.radius_start
                        : static_cast<double>(std::max(grid.rows, grid.cols)) / 2.0;
  const double r1 = params.radius_end;
  const std::size_t total = params.epochs * n;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  std::size_t step = 0;
  for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
    rng.shuffle(order);
    for (const std::size_t i : order) {
      const double frac =
          total > 1 ? static_cast<double>(step) / static_cast<double>(total - 1) : 0.0;
      const double lr =
          params.learning_rate_start + (params.learning_rate_end - params.learning_rate_start) * frac;
      const double radius = r0 + (r1 - r0) * frac;
      const double inv_two_r2 = 1.0 / (2.0 * radius * radius);
      const auto x = m.row(i);
      const std::size_t bmu = best_matching_node(x, codebook);
      for (std::size_t j = 0; j < nodes; ++j) {
        const double h = std::exp(-grid_d2[bmu * nodes + j] * inv_two_r2);
        const double rate = lr * h;
        if (rate < 1e-12) continue;
        auto w = codebook.row(j);
        for (std::size_t c = 0; c < w.size(); ++c) w[c] += rate * (x[c] - w[c]);
      }
      ++step;
    }
  }
  return codebook;
}

ClusteringResult som(const DataMatrix& m, const ClustererConfig& config) {
  detail::require_k_within_rows(m, config.k, "som");
  Rng rng(config.seed);
  const DataMatrix codebook = train_som(m, {1, config.k}, config.som, rng);

  ClusteringResult result;
  result.seed = config.seed;
  result.iterations = config.som.epochs;
  result.centroids = codebook_points(codebook);
  result.labels.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) result.labels[i] = best_matching_node(m.row(i), codebook);
  // A dead node keeps its codebook vector as its centroid.
  std::vector<Point> probe = result.centroids;
  detail::fill_empty_clusters(m, result.labels, probe);
  result.objective = within_cluster_sse(m, result.labels, result.centroids);
  result.objective_trace = {result.objective};
  detail::canonicalize_result(result);
  return result;
}

ClusteringResult som2k(const DataMatrix& m, const ClustererConfig& config) {
  detail::require_k_within_rows(m, config.k, "som2k");
  const SomGrid grid{config.som.grid_rows, config.som.grid_cols};
  if (grid.nodes() < config.k) {
    throw InvalidArgument("som2k: grid of " + std::to_string(grid.nodes()) +
                          " nodes is smaller than k = " + std::to_string(config.k));
  }
  Rng rng(config.seed);
  const DataMatrix codebook = train_som(m, grid, config.som, rng);

  ClustererConfig node_config = config;
  node_config.seed = derive_seed(config.seed, "som2k-nodes");
  const ClusteringResult node_clusters = kmeans(codebook, node_config);

  ClusteringResult result;
  result.seed = config.seed;
  result.iterations = node_clusters.iterations;
  result.labels.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    result.labels[i] = node_clusters.labels[best_matching_node(m.row(i), codebook)];
  }
  std::vector<Point> centroids = node_clusters.centroids;
  detail::fill_empty_clusters(m, result.labels, centroids);
  result.centroids = detail::cluster_means(m, result.labels, config.k);
  result.objective = within_cluster_sse(m, result.labels, result.centroids);
  result.objective_trace = {result.objective};
  detail::canonicalize_result(result);
  return result;
}

}  // namespace privclust
