#pragma once

#include "privclust/clusterer.hpp"
#include "privclust/eigen.hpp"

namespace privclust {

// Gaussian affinity exp(-|xi - xj|^2 / (2 sigma^2)) with a zero diagonal.
SymmetricMatrix gaussian_affinity(const DataMatrix& m, double sigma);

// Median pairwise Euclidean distance. Falls back to the mean of the nonzero
// distances when more than half the pairs coincide; throws DegenerateInput
// when all points are identical.
double median_pairwise_distance(const DataMatrix& m);

// I - D^{-1/2} A D^{-1/2}. Rows with zero degree get an identity row.
SymmetricMatrix normalized_laplacian(const SymmetricMatrix& affinity);

// Ng-Jordan-Weiss: top-k eigenvectors of D^{-1/2} A D^{-1/2}, rows scaled to
// unit length, K-Means on the embedding. Centroids are cluster means in the
// original space; objective is the embedding SSE.
ClusteringResult spectral(const DataMatrix& m, const ClustererConfig& config);

}  // namespace privclust
