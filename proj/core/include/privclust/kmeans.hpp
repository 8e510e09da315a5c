#pragma once

#include <vector>

#include "privclust/clusterer.hpp"

namespace privclust {

// Lloyd's algorithm started from k distinct rows drawn uniformly with
// config.seed. Stops when assignments are unchanged or after
// config.kmeans.max_iter updates. objective = within-cluster SSE.
ClusteringResult kmeans(const DataMatrix& m, const ClustererConfig& config);

// Same iteration from explicit starting centroids (k = initial.size()).
ClusteringResult kmeans_from(const DataMatrix& m, std::vector<Point> initial,
                             const ClustererConfig& config);

double within_cluster_sse(const DataMatrix& m, const Labels& labels,
                          const std::vector<Point>& centroids);

}  // namespace privclust
