#pragma once

#include <cstddef>
#include <vector>

#include "privclust/clusterer.hpp"
#include "privclust/random.hpp"

namespace privclust {

struct SomGrid {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::size_t nodes() const noexcept { return rows * cols; }
};

// Online Kohonen training with a Gaussian neighbourhood. Learning rate and
// radius decay linearly over all epochs x n presentations; the presentation
// order is reshuffled every epoch. Returns the codebook, one row per node in
// row-major grid order.
DataMatrix train_som(const DataMatrix& m, SomGrid grid, const SomParams& params, Rng& rng);

// One node per cluster on a 1 x k grid; label = best-matching node;
// centroids = codebook vectors; objective = quantisation SSE.
ClusteringResult som(const DataMatrix& m, const ClustererConfig& config);

// SOM on a grid_rows x grid_cols grid, then K-Means with k clusters on the
// codebook. Instance label = cluster of its best-matching node; centroids =
// means of the assigned instances; objective = SSE against those means.
ClusteringResult som2k(const DataMatrix& m, const ClustererConfig& config);

}  // namespace privclust
