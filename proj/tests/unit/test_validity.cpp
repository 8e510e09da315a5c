#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "privclust/errors.hpp"
#include "privclust/labels.hpp"
#include "privclust/validity.hpp"

using namespace privclust;

TEST(Validity, HandValues) {
  EXPECT_NEAR(adjusted_rand(Labels{0, 0, 1, 1}, Labels{0, 1, 0, 1}), -0.5, 1e-12);
  EXPECT_NEAR(entropy(Labels{0, 0, 0, 1}), 0.811278, 1e-6);
  EXPECT_NEAR(nmi(Labels{0, 0, 1, 1, 2}, Labels{4, 4, 7, 7, 1}), 1.0, 1e-12);
  EXPECT_EQ(adjusted_rand(Labels{0, 1, 1, 0}, Labels{3, 2, 2, 3}), 1.0);
  EXPECT_EQ(rand_index(Labels{0, 0, 1, 1}, Labels{0, 0, 1, 1}), 1.0);
}

TEST(Validity, DegenerateConventions) {
  const Labels one{0, 0, 0, 0};
  const Labels singletons{0, 1, 2, 3};
  EXPECT_EQ(adjusted_rand(one, one), 1.0);
  EXPECT_EQ(adjusted_rand(singletons, singletons), 1.0);
  EXPECT_EQ(adjusted_rand(one, singletons), 0.0);
  EXPECT_EQ(nmi(one, one), 1.0);
  EXPECT_EQ(nmi(one, Labels{0, 1, 0, 1}), 0.0);
  EXPECT_EQ(entropy(one), 0.0);
}

TEST(Validity, Preconditions) {
  EXPECT_THROW(adjusted_rand(Labels{0}, Labels{0}), InvalidArgument);
  EXPECT_THROW(rand_index(Labels{0, 1}, Labels{0}), InvalidArgument);
  EXPECT_THROW(nmi(Labels{0, 1}, Labels{0, 1, 1}), InvalidArgument);
}

TEST(Validity, ContingencyMargins) {
  const ContingencyTable t = contingency(Labels{0, 0, 1, 2, 2}, Labels{5, 5, 5, 1, 1});
  EXPECT_EQ(t.rows, 3u);
  EXPECT_EQ(t.cols, 2u);
  EXPECT_EQ(t.total, 5u);
  EXPECT_EQ(t(0, 0), 2u);
  EXPECT_EQ(t(2, 1), 2u);
  EXPECT_EQ(t.row_sums, (std::vector<std::size_t>{2, 1, 2}));
  EXPECT_EQ(t.col_sums, (std::vector<std::size_t>{3, 2}));
}

TEST(Validity, MatchesBruteForceOracles) {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::uniform_int_distribution<std::size_t> clusters(1, 4);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = size(gen);
    const Labels a = oracle::random_labels(gen, n, clusters(gen));
    const Labels b = oracle::random_labels(gen, n, clusters(gen));
    EXPECT_NEAR(rand_index(a, b), oracle::rand_index(a, b), 1e-12);
    EXPECT_NEAR(adjusted_rand(a, b), oracle::adjusted_rand(a, b), 1e-12);
    EXPECT_NEAR(entropy(a), oracle::entropy(a), 1e-12);
    EXPECT_NEAR(mutual_information(a, b), oracle::mutual_information(a, b), 1e-12);
    EXPECT_NEAR(nmi(a, b), oracle::nmi(a, b), 1e-12);
  }
}

TEST(Validity, Properties) {
  std::mt19937_64 gen(7);
  for (int t = 0; t < 300; ++t) {
    const Labels a = oracle::random_labels(gen, 30, 3);
    const Labels b = oracle::random_labels(gen, 30, 4);
    // Symmetry.
    EXPECT_NEAR(adjusted_rand(a, b), adjusted_rand(b, a), 1e-15);
    EXPECT_NEAR(nmi(a, b), nmi(b, a), 1e-15);
    // Bounds.
    EXPECT_LE(adjusted_rand(a, b), 1.0);
    EXPECT_GE(nmi(a, b), 0.0);
    EXPECT_LE(nmi(a, b), 1.0);
    EXPECT_LE(mutual_information(a, b), std::min(entropy(a), entropy(b)) + 1e-12);
    // Invariance under relabeling.
    Labels renamed = a;
    for (auto& l : renamed) l = 10 - l;
    EXPECT_EQ(adjusted_rand(renamed, b), adjusted_rand(a, b));
    EXPECT_NEAR(nmi(renamed, b), nmi(a, b), 1e-15);
  }
}
