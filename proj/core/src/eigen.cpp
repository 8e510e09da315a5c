#include "privclust/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace privclust {

namespace {

double off_diagonal_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.size; ++p) {
    for (std::size_t q = p + 1; q < a.size; ++q) s += 2.0 * a(p, q) * a(p, q);
  }
  return std::sqrt(s);
}

double frobenius_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (const double v : a.values) s += v * v;
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition symmetric_eigen(SymmetricMatrix a, const JacobiOptions& options) {
  const std::size_t n = a.size;
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  // Absolute tolerance for unit-scale matrices, relative beyond that; roundoff
  // keeps the off-diagonal mass near eps * |A| for large entries.
  const double threshold = options.off_diagonal_tolerance * std::max(1.0, frobenius_norm(a));

  EigenDecomposition out;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) break;
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  out.eigenvalues.reserve(n);
  out.vectors.reserve(n);
  for (const std::size_t j : order) {
    out.eigenvalues.push_back(a(j, j));
    std::vector<double> vec(n);
    for (std::size_t k = 0; k < n; ++k) vec[k] = v[k * n + j];
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace privclust
