#include "privclust/validity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "privclust/errors.hpp"
#include "privclust/labels.hpp"

namespace privclust {

namespace {

void require_equal_length(std::size_t a, std::size_t b, const char* who) {
  if (a != b) {
    throw InvalidArgument(std::string(who) + ": labelings have different lengths (" +
                          std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

void require_pairs(std::size_t n, const char* who) {
  if (n < 2) throw InvalidArgument(std::string(who) + ": needs at least 2 instances");
}

double choose2(std::size_t v) {
  const double x = static_cast<double>(v);
  return x * (x - 1.0) / 2.0;
}

struct PairCounts {
  double same_both = 0.0;  // sum_ij C(n_ij, 2)
  double same_a = 0.0;     // sum_i C(a_i, 2)
  double same_b = 0.0;     // sum_j C(b_j, 2)
  double total = 0.0;      // C(n, 2)
};

PairCounts pair_counts(const ContingencyTable& t) {
  PairCounts p;
  for (const std::size_t c : t.counts) p.same_both += choose2(c);
  for (const std::size_t c : t.row_sums) p.same_a += choose2(c);
  for (const std::size_t c : t.col_sums) p.same_b += choose2(c);
  p.total = choose2(t.total);
  return p;
}

double plogp_sum(const std::vector<std::size_t>& counts, double n) {
  double h = 0.0;
  for (const std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

ContingencyTable contingency(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  require_equal_length(a.size(), b.size(), "contingency");
  const Labels ca = canonicalize(a);
  const Labels cb = canonicalize(b);
  ContingencyTable t;
  for (const std::size_t v : ca) t.rows = std::max(t.rows, v + 1);
  for (const std::size_t v : cb) t.cols = std::max(t.cols, v + 1);
  t.counts.assign(t.rows * t.cols, 0);
  t.row_sums.assign(t.rows, 0);
  t.col_sums.assign(t.cols, 0);
  t.total = ca.size();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    ++t.counts[ca[i] * t.cols + cb[i]];
    ++t.row_sums[ca[i]];
    ++t.col_sums[cb[i]];
  }
  return t;
}

double rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  require_equal_length(a.size(), b.size(), "rand_index");
  require_pairs(a.size(), "rand_index");
  const PairCounts p = pair_counts(contingency(a, b));
  // Agreements: pairs together in both plus pairs apart in both.
  const double apart_both = p.total - p.same_a - p.same_b + p.same_both;
  return (p.same_both + apart_both) / p.total;
}

double adjusted_rand(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  require_equal_length(a.size(), b.size(), "adjusted_rand");
  require_pairs(a.size(), "adjusted_rand");
  const PairCounts p = pair_counts(contingency(a, b));
  // Both numerator and denominator scaled by C(n, 2) to stay in integers.
  const double numerator = p.same_both * p.total - p.same_a * p.same_b;
  const double denominator = 0.5 * (p.same_a + p.same_b) * p.total - p.same_a * p.same_b;
  if (denominator == 0.0) return same_partition(a, b) ? 1.0 : 0.0;
  return numerator / denominator;
}

double entropy(std::span<const std::size_t> a) {
  if (a.empty()) return 0.0;
  const Labels ca = canonicalize(a);
  std::vector<std::size_t> counts;
  for (const std::size_t v : ca) {
    if (v >= counts.size()) counts.resize(v + 1, 0);
    ++counts[v];
  }
  return plogp_sum(counts, static_cast<double>(a.size()));
}

double mutual_information(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  require_equal_length(a.size(), b.size(), "mutual_information");
  if (a.empty()) return 0.0;
  const ContingencyTable t = contingency(a, b);
  const double n = static_cast<double>(t.total);
  double mi = 0.0;
  for (std::size_t r = 0; r < t.rows; ++r) {
    for (std::size_t c = 0; c < t.cols; ++c) {
      const std::size_t nij = t(r, c);
      if (nij == 0) continue;
      const double pij = static_cast<double>(nij) / n;
      const double pa = static_cast<double>(t.row_sums[r]) / n;
      const double pb = static_cast<double>(t.col_sums[c]) / n;
      mi += pij * std::log2(pij / (pa * pb));
    }
  }
  // Rounding can leave a tiny negative value for independent labelings.
  return mi < 0.0 ? 0.0 : mi;
}

double nmi(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  require_equal_length(a.size(), b.size(), "nmi");
  const double ha = entropy(a);
  const double hb = entropy(b);
  if (ha == 0.0 || hb == 0.0) return same_partition(a, b) ? 1.0 : 0.0;
  const double value = mutual_information(a, b) / std::sqrt(ha * hb);
  return std::min(1.0, value);
}

}  // namespace privclust
