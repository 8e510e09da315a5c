#pragma once

#include <vector>

#include "privclust/clusterer.hpp"

namespace privclust {

struct GmmFit {
  ClusteringResult result;
  std::vector<double> weights;
  std::vector<Point> means;
  std::vector<Point> variances;
  // n x k responsibilities from the final E-step.
  DataMatrix responsibilities;
};

// EM for a k-component diagonal-covariance Gaussian mixture, initialised from
// one K-Means run with the same seed. objective = log-likelihood (nats).
GmmFit em_gmm_fit(const DataMatrix& m, const ClustererConfig& config);

ClusteringResult em_gmm(const DataMatrix& m, const ClustererConfig& config);

}  // namespace privclust
