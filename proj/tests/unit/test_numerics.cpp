#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "privclust/eigen.hpp"
#include "privclust/errors.hpp"
#include "privclust/geometry.hpp"
#include "privclust/matrix.hpp"
#include "privclust/normalize.hpp"
#include "privclust/pca.hpp"
#include "privclust/random.hpp"

using namespace privclust;

namespace {

DataMatrix random_matrix(std::size_t n, std::size_t d, std::uint64_t seed, double scale = 1.0) {
  Rng rng(seed);
  DataMatrix m(n, d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) m(r, c) = scale * rng.normal() * (1.0 + c);
  }
  return m;
}

Eigen::MatrixXd sample_covariance(const DataMatrix& m) {
  Eigen::MatrixXd x(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) x(r, c) = m(r, c);
  }
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - mean;
  return centered.transpose() * centered / static_cast<double>(m.rows() - 1);
}

}  // namespace

TEST(DataMatrix, RejectsNonFiniteValues) {
  EXPECT_THROW(DataMatrix(1, 2, std::vector<double>{1.0, NAN}), InvalidArgument);
  EXPECT_THROW(DataMatrix(1, 1, INFINITY), InvalidArgument);
  EXPECT_THROW(DataMatrix(2, 2, std::vector<double>{1.0, 2.0, 3.0}), InvalidArgument);
}

TEST(DataMatrix, FromRowsChecksWidth) {
  EXPECT_THROW(DataMatrix::from_rows({{1.0, 2.0}, {3.0}}), InvalidArgument);
  const DataMatrix m = DataMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(1, 0), 3.0);
  EXPECT_EQ(m.column(1), (std::vector<double>{2.0, 4.0}));
}

TEST(DataMatrix, ConcatFeatures) {
  const DataMatrix a = DataMatrix::from_rows({{1, 2}, {3, 4}});
  const DataMatrix b = DataMatrix::from_rows({{5}, {6}});
  const DataMatrix c = concat_features(a, b);
  EXPECT_EQ(c, DataMatrix::from_rows({{1, 2, 5}, {3, 4, 6}}));
  EXPECT_EQ(concat_features(a, DataMatrix(2, 0)), a);
  EXPECT_THROW(concat_features(a, DataMatrix(3, 1)), InvalidArgument);

  const DataMatrix digits = concat_features(DataMatrix(100, 100), DataMatrix(100, 21));
  EXPECT_EQ(digits.cols(), 121u);
}

TEST(Geometry, EuclideanDistance) {
  EXPECT_DOUBLE_EQ(euclidean_distance(Point{0, 0}, Point{3, 4}), 5.0);
  EXPECT_EQ(euclidean_distance(Point{1.5, -2}, Point{1.5, -2}), 0.0);
  EXPECT_NEAR(euclidean_distance(Point{0.1, 0.1}, Point{0.5, 0.4}), 0.5, 1e-15);
  EXPECT_THROW(euclidean_distance(Point{0, 0}, Point{1}), InvalidArgument);
}

TEST(Geometry, TriangleInequality) {
  Rng rng(3);
  for (int t = 0; t < 1000; ++t) {
    Point a(4), b(4), c(4);
    for (std::size_t i = 0; i < 4; ++i) {
      a[i] = rng.normal();
      b[i] = rng.normal();
      c[i] = rng.normal();
    }
    EXPECT_LE(euclidean_distance(a, c), euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-12);
    EXPECT_EQ(euclidean_distance(a, b), euclidean_distance(b, a));
  }
}

TEST(Geometry, ProjectOntoLine) {
  EXPECT_EQ(project_onto_line(Point{1, 1}, Point{0, 0}, Point{2, 0}), (Point{1, 0}));
  EXPECT_EQ(project_onto_line(Point{0.3, 0.7}, Point{0.3, 0.7}, Point{2, 0}), (Point{0.3, 0.7}));
  EXPECT_EQ(project_onto_line(Point{3, 4}, Point{0, 0}, Point{1, 0}), (Point{3, 0}));
  EXPECT_THROW(project_onto_line(Point{1, 1}, Point{2, 2}, Point{2, 2}), DegenerateInput);
}

TEST(Geometry, ProjectionResidualIsOrthogonal) {
  Rng rng(11);
  for (int t = 0; t < 2000; ++t) {
    Point x(3), a(3), b(3);
    for (std::size_t i = 0; i < 3; ++i) {
      x[i] = 5 * rng.normal();
      a[i] = rng.normal();
      b[i] = rng.normal();
    }
    const Point z = project_onto_line(x, a, b);
    double residual = 0;
    for (std::size_t i = 0; i < 3; ++i) residual += (x[i] - z[i]) * (b[i] - a[i]);
    EXPECT_NEAR(residual, 0.0, 1e-9);
  }
}

TEST(Normalize, MinMaxColumns) {
  const DataMatrix m = DataMatrix::from_rows({{2, 5, 0}, {4, 5, 1}, {6, 5, 0.25}});
  const DataMatrix n = minmax_normalize(m);
  EXPECT_EQ(n.column(0), (std::vector<double>{0, 0.5, 1}));
  EXPECT_EQ(n.column(1), (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(n.column(2), (std::vector<double>{0, 1, 0.25}));
}

TEST(Normalize, Idempotent) {
  const DataMatrix m = random_matrix(50, 6, 5);
  const DataMatrix once = minmax_normalize(m);
  EXPECT_EQ(minmax_normalize(once), once);
}

TEST(Pca, RankOneLine) {
  DataMatrix m(5, 2);
  for (std::size_t i = 0; i < 5; ++i) {
    m(i, 0) = static_cast<double>(i);
    m(i, 1) = 2.0 * static_cast<double>(i);
  }
  const PcaModel model = pca_fit(m, 2);
  EXPECT_NEAR(model.components[0][0], 1 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(model.components[0][1], 2 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(model.eigenvalues[1], 0.0, 1e-12);
  const DataMatrix t = pca_transform(model, m);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(t(i, 1), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(dot(model.components[0], model.components[1])), 0.0, 1e-12);
}

TEST(Pca, AxisAlignedVariances) {
  // Column variances in ratio 9:1 and zero covariance.
  const DataMatrix m = DataMatrix::from_rows({{3, 1}, {-3, 1}, {3, -1}, {-3, -1}});
  const PcaModel model = pca_fit(m, 2);
  EXPECT_NEAR(model.eigenvalues[0], 12.0, 1e-12);
  EXPECT_NEAR(model.eigenvalues[1], 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(model.components[0][0], 1.0, 1e-12);
  EXPECT_NEAR(model.components[1][1], 1.0, 1e-12);
}

TEST(Pca, MeanRowMapsToZero) {
  const DataMatrix m = random_matrix(30, 4, 8);
  const PcaModel model = pca_fit(m, 3);
  const DataMatrix mean_row(1, 4, std::vector<double>(model.mean));
  const DataMatrix t = pca_transform(model, mean_row);
  for (std::size_t c = 0; c < 3; ++c) EXPECT_NEAR(t(0, c), 0.0, 1e-12);
}

TEST(Pca, RangeAndShapeErrors) {
  const DataMatrix m = random_matrix(10, 3, 1);
  EXPECT_THROW(pca_fit(m, 0), InvalidArgument);
  EXPECT_THROW(pca_fit(m, 4), InvalidArgument);
  const PcaModel model = pca_fit(m, 2);
  EXPECT_THROW(pca_transform(model, DataMatrix(2, 5)), InvalidArgument);
}

TEST(Pca, SingleRowHasZeroCovariance) {
  const DataMatrix m = DataMatrix::from_rows({{1, 2, 3}});
  const PcaModel model = pca_fit(m, 1);
  EXPECT_EQ(model.eigenvalues[0], 0.0);
  EXPECT_NEAR(std::sqrt(dot(model.components[0], model.components[0])), 1.0, 1e-12);
}

TEST(Pca, MatchesDenseEigensolverAndReconstructs) {
  const DataMatrix m = random_matrix(60, 7, 42);
  const PcaModel model = pca_fit(m, 7);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sample_covariance(m));
  const Eigen::VectorXd ref = solver.eigenvalues().reverse();
  double total = 0;
  for (int j = 0; j < 7; ++j) {
    EXPECT_NEAR(model.eigenvalues[j], ref[j], 1e-8);
    total += ref[j];
  }
  EXPECT_NEAR(std::accumulate(model.eigenvalues.begin(), model.eigenvalues.end(), 0.0), total,
              1e-9);
  const DataMatrix t = pca_transform(model, m);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      double x = model.mean[c];
      for (std::size_t j = 0; j < 7; ++j) x += t(r, j) * model.components[j][c];
      EXPECT_NEAR(x, m(r, c), 1e-8);
    }
  }
}

TEST(Pca, SignConventionAndDeterminism) {
  const DataMatrix m = random_matrix(40, 5, 17);
  const PcaModel a = pca_fit(m, 3);
  const PcaModel b = pca_fit(m, 3);
  EXPECT_EQ(a.components, b.components);
  for (const Point& c : a.components) {
    const auto big = std::max_element(c.begin(), c.end(),
                                      [](double x, double y) { return std::abs(x) < std::abs(y); });
    EXPECT_GT(*big, 0.0);
  }
}

TEST(Pca, DualAgreesWithDirect) {
  const DataMatrix m = random_matrix(20, 35, 23);
  const PcaModel direct = pca_fit(m, 5, PcaSolver::Direct);
  const PcaModel dual = pca_fit(m, 5, PcaSolver::Dual);
  for (std::size_t j = 0; j < 5; ++j) {
    EXPECT_NEAR(direct.eigenvalues[j], dual.eigenvalues[j], 1e-8);
    for (std::size_t c = 0; c < 35; ++c) {
      EXPECT_NEAR(direct.components[j][c], dual.components[j][c], 1e-8);
    }
  }
}

TEST(Jacobi, DiagonalizesKnownMatrix) {
  SymmetricMatrix a(2);
  a.values = {2, 1, 1, 2};
  const EigenDecomposition e = symmetric_eigen(a);
  EXPECT_NEAR(e.eigenvalues[0], 3.0, 1e-12);
  EXPECT_NEAR(e.eigenvalues[1], 1.0, 1e-12);
  EXPECT_NEAR(std::abs(e.vectors[0][0]), 1 / std::sqrt(2.0), 1e-12);
}

TEST(Jacobi, RandomSymmetricAgainstEigen) {
  std::mt19937_64 gen(9);
  std::normal_distribution<double> dist;
  const std::size_t n = 12;
  SymmetricMatrix a(n);
  Eigen::MatrixXd ref(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = dist(gen);
      a(i, j) = a(j, i) = v;
      ref(i, j) = ref(j, i) = v;
    }
  }
  const EigenDecomposition e = symmetric_eigen(a);
  const Eigen::VectorXd vals = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(ref).eigenvalues();
  for (std::size_t j = 0; j < n; ++j) {
    EXPECT_NEAR(e.eigenvalues[j], vals[n - 1 - j], 1e-10);
    // A v = lambda v
    for (std::size_t r = 0; r < n; ++r) {
      double av = 0;
      for (std::size_t c = 0; c < n; ++c) av += a(r, c) * e.vectors[j][c];
      EXPECT_NEAR(av, e.eigenvalues[j] * e.vectors[j][r], 1e-9);
    }
  }
}

TEST(Random, DeterministicStreams) {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_NE(derive_seed(1, "tech", 0), derive_seed(1, "priv", 0));
  EXPECT_NE(derive_seed(1, "tech", 0), derive_seed(1, "tech", 1));
  EXPECT_EQ(derive_seed(1, "tech", 3), derive_seed(1, "tech", 3));
}

TEST(Random, SampleWithoutReplacementIsDistinct) {
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    auto s = rng.sample_without_replacement(10, 4);
    ASSERT_EQ(s.size(), 4u);
    std::sort(s.begin(), s.end());
    EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
    EXPECT_LT(s.back(), 10u);
  }
  for (int t = 0; t < 1000; ++t) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}
