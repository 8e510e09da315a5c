#include "privclust/clusterer.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "privclust/em_gmm.hpp"
#include "privclust/errors.hpp"
#include "privclust/geometry.hpp"
#include "privclust/kmeans.hpp"
#include "privclust/som.hpp"
#include "privclust/spectral.hpp"

namespace privclust {

Labels canonicalize(std::span<const std::size_t> labels) {
  Labels out(labels.size());
  std::size_t top = 0;
  for (const std::size_t v : labels) top = std::max(top, v);
  if (top < 2 * labels.size() + 16) {
    constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> ids(top + 1, kUnseen);
    std::size_t next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::size_t& id = ids[labels[i]];
      if (id == kUnseen) id = next++;
      out[i] = id;
    }
    return out;
  }
  std::unordered_map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto [it, inserted] = ids.try_emplace(labels[i], ids.size());
    out[i] = it->second;
  }
  return out;
}

std::size_t count_clusters(std::span<const std::size_t> labels) {
  const Labels c = canonicalize(labels);
  std::size_t k = 0;
  for (const std::size_t v : c) k = std::max(k, v + 1);
  return k;
}

bool same_partition(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  return a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::KMeans: return "kmeans";
    case Algorithm::Em: return "em";
    case Algorithm::Spectral: return "spectral";
    case Algorithm::Som: return "som";
    case Algorithm::Som2k: return "som2k";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const Algorithm a : {Algorithm::KMeans, Algorithm::Em, Algorithm::Spectral, Algorithm::Som,
                            Algorithm::Som2k}) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

ClusteringResult run_clusterer(Algorithm algorithm, const DataMatrix& m,
                               const ClustererConfig& config) {
  switch (algorithm) {
    case Algorithm::KMeans: return kmeans(m, config);
    case Algorithm::Em: return em_gmm(m, config);
    case Algorithm::Spectral: return spectral(m, config);
    case Algorithm::Som: return som(m, config);
    case Algorithm::Som2k: return som2k(m, config);
  }
  throw InvalidArgument("run_clusterer: unknown algorithm");
}

namespace detail {

std::vector<std::size_t> canonicalize_result(ClusteringResult& result) {
  const std::size_t k = result.centroids.size();
  std::vector<std::size_t> remap(k, k);
  std::size_t next = 0;
  for (std::size_t& label : result.labels) {
    if (remap[label] == k) remap[label] = next++;
    label = remap[label];
  }
  std::vector<Point> centroids(k);
  for (std::size_t old = 0; old < k; ++old) {
    // Unused ids (never present in a returned result) keep trailing slots.
    if (remap[old] == k) remap[old] = next++;
    centroids[remap[old]] = std::move(result.centroids[old]);
  }
  result.centroids = std::move(centroids);
  return remap;
}

std::size_t nearest(std::span<const double> x, const std::vector<Point>& centroids) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < centroids.size(); ++j) {
    const double d = squared_distance(x, centroids[j]);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return best;
}

std::size_t fill_empty_clusters(const DataMatrix& m, Labels& labels,
                                std::vector<Point>& centroids) {
  const std::size_t k = centroids.size();
  std::vector<std::size_t> sizes(k, 0);
  for (const std::size_t l : labels) ++sizes[l];
  std::size_t moves = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (sizes[j] != 0) continue;
    std::size_t pick = labels.size();
    double pick_d = -1.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (sizes[labels[i]] <= 1) continue;
      const double d = squared_distance(m.row(i), centroids[labels[i]]);
      if (d > pick_d) {
        pick_d = d;
        pick = i;
      }
    }
    if (pick == labels.size()) {
      throw InvalidArgument("fill_empty_clusters: fewer instances than clusters");
    }
    --sizes[labels[pick]];
    labels[pick] = j;
    sizes[j] = 1;
    centroids[j] = m.row_point(pick);
    ++moves;
  }
  return moves;
}

std::vector<Point> cluster_means(const DataMatrix& m, const Labels& labels, std::size_t k) {
  std::vector<Point> means(k, Point(m.cols(), 0.0));
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto x = m.row(i);
    Point& acc = means[labels[i]];
    for (std::size_t c = 0; c < x.size(); ++c) acc[c] += x[c];
    ++counts[labels[i]];
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (counts[j] == 0) continue;
    for (double& v : means[j]) v /= static_cast<double>(counts[j]);
  }
  return means;
}

void require_k_within_rows(const DataMatrix& m, std::size_t k, std::string_view who) {
  if (k < 1) throw InvalidArgument(std::string(who) + ": k must be at least 1");
  if (k > m.rows()) {
    throw InvalidArgument(std::string(who) + ": k = " + std::to_string(k) + " exceeds n = " +
                          std::to_string(m.rows()));
  }
}

}  // namespace detail

}  // namespace privclust
