#include "privclust/pca.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "privclust/eigen.hpp"
#include "privclust/errors.hpp"

namespace privclust {

namespace {

DataMatrix centered(const DataMatrix& m, const Point& mean) {
  DataMatrix c(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < m.cols(); ++j) c(r, j) = m(r, j) - mean[j];
  }
  return c;
}

double norm(const Point& v) {
  double s = 0.0;
  for (const double x : v) s += x * x;
  return std::sqrt(s);
}

// Extends `basis` with the standard basis vector whose component orthogonal
// to the current basis is largest. Used for directions with zero variance,
// where the dual mapping is undefined.
Point complete_basis(const std::vector<Point>& basis, std::size_t dim) {
  Point best;
  double best_norm = -1.0;
  for (std::size_t e = 0; e < dim; ++e) {
    Point v(dim, 0.0);
    v[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Point& b : basis) {
        double proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += v[i] * b[i];
        for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * b[i];
      }
    }
    const double n = norm(v);
    if (n > best_norm + 1e-12) {
      best_norm = n;
      best = std::move(v);
    }
  }
  for (double& x : best) x /= best_norm;
  return best;
}

void fix_sign(Point& v) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
  }
  if (!v.empty() && v[arg] < 0.0) {
    for (double& x : v) x = -x;
  }
}

}  // namespace

PcaModel pca_fit(const DataMatrix& m, std::size_t n_components, PcaSolver solver) {
  const std::size_t n = m.rows();
  const std::size_t d = m.cols();
  if (n_components < 1 || n_components > std::min(n, d)) {
    throw InvalidArgument("pca_fit: n_components must be in [1, " +
                          std::to_string(std::min(n, d)) + "], got " +
                          std::to_string(n_components));
  }
  PcaModel model;
  model.mean = column_means(m);
  const DataMatrix xc = centered(m, model.mean);
  const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
  const double scale = n > 1 ? 1.0 / denom : 0.0;

  if (solver == PcaSolver::Auto) solver = n < d ? PcaSolver::Dual : PcaSolver::Direct;

  std::vector<Point> components;
  std::vector<double> eigenvalues;
  if (solver == PcaSolver::Direct) {
    SymmetricMatrix cov(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += xc(r, i) * xc(r, j);
        cov(i, j) = cov(j, i) = s * scale;
      }
    }
    const EigenDecomposition eig = symmetric_eigen(std::move(cov));
    for (std::size_t j = 0; j < n_components; ++j) {
      components.push_back(eig.vectors[j]);
      eigenvalues.push_back(std::max(0.0, eig.eigenvalues[j]));
    }
  } else {
    SymmetricMatrix gram(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) s += xc(a, j) * xc(b, j);
        gram(a, b) = gram(b, a) = s * scale;
      }
    }
    const EigenDecomposition eig = symmetric_eigen(std::move(gram));
    const double lambda_max = std::max(1.0, eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues[0]);
    for (std::size_t j = 0; j < n_components; ++j) {
      const double lambda = std::max(0.0, eig.eigenvalues[j]);
      Point v(d, 0.0);
      double vn = 0.0;
      if (lambda > 1e-12 * lambda_max) {
        // Xc^T u is an eigenvector of the covariance with the same eigenvalue.
        for (std::size_t r = 0; r < n; ++r) {
          const double u = eig.vectors[j][r];
          for (std::size_t c = 0; c < d; ++c) v[c] += xc(r, c) * u;
        }
        vn = norm(v);
      }
      if (vn > 0.0) {
        for (double& x : v) x /= vn;
      } else {
        v = complete_basis(components, d);
      }
      components.push_back(std::move(v));
      eigenvalues.push_back(vn > 0.0 ? lambda : 0.0);
    }
  }

  for (Point& c : components) fix_sign(c);
  model.components = std::move(components);
  model.eigenvalues = std::move(eigenvalues);
  return model;
}

DataMatrix pca_transform(const PcaModel& model, const DataMatrix& m) {
  if (m.cols() != model.mean.size()) {
    throw InvalidArgument("pca_transform: matrix has " + std::to_string(m.cols()) +
                          " columns, model expects " + std::to_string(model.mean.size()));
  }
  DataMatrix out(m.rows(), model.components.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < model.components.size(); ++j) {
      const Point& comp = model.components[j];
      double s = 0.0;
      for (std::size_t c = 0; c < m.cols(); ++c) s += (m(r, c) - model.mean[c]) * comp[c];
      out(r, j) = s;
    }
  }
  return out;
}

}  // namespace privclust
