#pragma once

#include <cstddef>
#include <vector>

#include "privclust/matrix.hpp"

namespace privclust {

struct PcaModel {
  Point mean;
  // Unit-length principal axes, pairwise orthogonal.
  std::vector<Point> components;
  // Variance along each component, nonincreasing.
  std::vector<double> eigenvalues;
};

enum class PcaSolver {
  Auto,    // dual (Gram) space when rows < cols, covariance otherwise
  Direct,  // d x d sample covariance
  Dual,    // n x n Gram matrix of the centered data
};

// Top n_components eigenvectors of the sample covariance (denominator n - 1).
// Each component is sign-flipped so its largest-magnitude coordinate is
// positive.
PcaModel pca_fit(const DataMatrix& m, std::size_t n_components,
                 PcaSolver solver = PcaSolver::Auto);

// (m - mean) projected onto the components; n x n_components.
DataMatrix pca_transform(const PcaModel& model, const DataMatrix& m);

}  // namespace privclust
