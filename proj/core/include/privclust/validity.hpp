#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace privclust {

// Co-occurrence counts between two labelings. Rows index the canonical ids of
// the first labeling, columns those of the second.
struct ContingencyTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> counts;  // row-major rows x cols
  std::vector<std::size_t> row_sums;
  std::vector<std::size_t> col_sums;
  std::size_t total = 0;

  std::size_t operator()(std::size_t r, std::size_t c) const { return counts[r * cols + c]; }
};

ContingencyTable contingency(std::span<const std::size_t> a, std::span<const std::size_t> b);

// Fraction of the n(n-1)/2 pairs on which a and b agree. Requires n >= 2.
double rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b);

// Hubert-Arabie adjusted Rand index. When the chance-corrected denominator
// vanishes (both partitions trivial) returns 1 for identical partitions, 0
// otherwise. Requires n >= 2.
double adjusted_rand(std::span<const std::size_t> a, std::span<const std::size_t> b);

// Shannon entropy of the cluster-size distribution, in bits.
double entropy(std::span<const std::size_t> a);

// Mutual information in bits.
double mutual_information(std::span<const std::size_t> a, std::span<const std::size_t> b);

// I(a;b) / sqrt(H(a) H(b)). If either entropy is zero: 1 for identical
// partitions, 0 otherwise.
double nmi(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace privclust
