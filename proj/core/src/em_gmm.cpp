#include "privclust/em_gmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "privclust/kmeans.hpp"

namespace privclust {

namespace {

constexpr double kTinyWeight = 1e-300;

// Fills resp with normalised responsibilities and returns the log-likelihood.
double e_step(const DataMatrix& m, const std::vector<double>& weights,
              const std::vector<Point>& means, const std::vector<Point>& variances,
              DataMatrix& resp) {
  const std::size_t n = m.rows();
  const std::size_t k = weights.size();
  const std::size_t d = m.cols();
  const double log2pi = std::log(2.0 * std::numbers::pi);

  std::vector<double> log_norm(k);
  for (std::size_t j = 0; j < k; ++j) {
    double s = std::log(std::max(weights[j], kTinyWeight)) - 0.5 * static_cast<double>(d) * log2pi;
    for (std::size_t c = 0; c < d; ++c) s -= 0.5 * std::log(variances[j][c]);
    log_norm[j] = s;
  }

  double log_likelihood = 0.0;
  std::vector<double> lp(k);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = m.row(i);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
      double q = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double diff = x[c] - means[j][c];
        q += diff * diff / variances[j][c];
      }
      lp[j] = log_norm[j] - 0.5 * q;
      top = std::max(top, lp[j]);
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) sum += std::exp(lp[j] - top);
    const double log_sum = top + std::log(sum);
    log_likelihood += log_sum;
    for (std::size_t j = 0; j < k; ++j) resp(i, j) = std::exp(lp[j] - log_sum);
  }
  return log_likelihood;
}

void m_step(const DataMatrix& m, const DataMatrix& resp, double floor,
            std::vector<double>& weights, std::vector<Point>& means,
            std::vector<Point>& variances) {
  const std::size_t n = m.rows();
  const std::size_t k = weights.size();
  const std::size_t d = m.cols();
  for (std::size_t j = 0; j < k; ++j) {
    double nk = 0.0;
    Point mu(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = resp(i, j);
      nk += r;
      const auto x = m.row(i);
      for (std::size_t c = 0; c < d; ++c) mu[c] += r * x[c];
    }
    weights[j] = nk / static_cast<double>(n);
    // A component with no mass keeps its parameters.
    if (nk <= kTinyWeight) continue;
    for (double& v : mu) v /= nk;
    Point var(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = resp(i, j);
      const auto x = m.row(i);
      for (std::size_t c = 0; c < d; ++c) {
        const double diff = x[c] - mu[c];
        var[c] += r * diff * diff;
      }
    }
    // The likelihood is unimodal in each variance, so clamping the
    // unconstrained optimum to the floor is the constrained optimum.
    for (double& v : var) v = std::max(v / nk, floor);
    means[j] = std::move(mu);
    variances[j] = std::move(var);
  }
}

}  // namespace

GmmFit em_gmm_fit(const DataMatrix& m, const ClustererConfig& config) {
  detail::require_k_within_rows(m, config.k, "em_gmm");
  const std::size_t n = m.rows();
  const std::size_t k = config.k;
  const std::size_t d = m.cols();
  const double floor = config.em.variance_floor;

  const ClusteringResult init = kmeans(m, config);
  GmmFit fit;
  fit.means = init.centroids;
  fit.weights.assign(k, 0.0);
  fit.variances.assign(k, Point(d, 0.0));
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = init.labels[i];
    ++counts[j];
    const auto x = m.row(i);
    for (std::size_t c = 0; c < d; ++c) {
      const double diff = x[c] - fit.means[j][c];
      fit.variances[j][c] += diff * diff;
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    fit.weights[j] = static_cast<double>(counts[j]) / static_cast<double>(n);
    for (double& v : fit.variances[j]) v = std::max(v / static_cast<double>(counts[j]), floor);
  }

  fit.responsibilities = DataMatrix(n, k);
  ClusteringResult& result = fit.result;
  result.seed = config.seed;
  const std::size_t max_iter = std::max<std::size_t>(1, config.em.max_iter);
  for (std::size_t it = 1; it <= max_iter; ++it) {
    const double ll = e_step(m, fit.weights, fit.means, fit.variances, fit.responsibilities);
    const bool converged =
        !result.objective_trace.empty() && ll - result.objective_trace.back() < config.em.tolerance;
    result.objective_trace.push_back(ll);
    result.iterations = it;
    if (converged || it == max_iter) break;
    m_step(m, fit.responsibilities, floor, fit.weights, fit.means, fit.variances);
  }
  result.objective = result.objective_trace.back();

  result.labels.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < k; ++j) {
      if (fit.responsibilities(i, j) > fit.responsibilities(i, best)) best = j;
    }
    result.labels[i] = best;
  }
  // Components that own no instance take the instance with the highest
  // responsibility for them from a cluster with more than one member.
  std::vector<std::size_t> sizes(k, 0);
  for (const std::size_t l : result.labels) ++sizes[l];
  for (std::size_t j = 0; j < k; ++j) {
    if (sizes[j] != 0) continue;
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (sizes[result.labels[i]] <= 1) continue;
      if (pick == n || fit.responsibilities(i, j) > fit.responsibilities(pick, j)) pick = i;
    }
    --sizes[result.labels[pick]];
    result.labels[pick] = j;
    sizes[j] = 1;
  }
  result.centroids = fit.means;
  const std::vector<std::size_t> remap = detail::canonicalize_result(result);
  std::vector<double> weights(k);
  std::vector<Point> means(k);
  std::vector<Point> variances(k);
  DataMatrix resp(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    weights[remap[j]] = fit.weights[j];
    means[remap[j]] = std::move(fit.means[j]);
    variances[remap[j]] = std::move(fit.variances[j]);
    for (std::size_t i = 0; i < n; ++i) resp(i, remap[j]) = fit.responsibilities(i, j);
  }
  fit.weights = std::move(weights);
  fit.means = std::move(means);
  fit.variances = std::move(variances);
  fit.responsibilities = std::move(resp);
  return fit;
}

ClusteringResult em_gmm(const DataMatrix& m, const ClustererConfig& config) {
  return em_gmm_fit(m, config).result;
}

}  // namespace privclust
