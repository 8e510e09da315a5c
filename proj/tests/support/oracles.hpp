#pragma once

// Brute-force reference implementations shared by unit and acceptance tests.
// Deliberately naive: pair enumeration, map-based counting, full sign
// enumeration.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Labels = std::vector<std::size_t>;

struct PairCounts {
  double same_same = 0, same_diff = 0, diff_same = 0, diff_diff = 0;
};

inline PairCounts pair_counts(const Labels& a, const Labels& b) {
  PairCounts p;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const bool sa = a[i] == a[j];
      const bool sb = b[i] == b[j];
      if (sa && sb) p.same_same += 1;
      else if (sa) p.same_diff += 1;
      else if (sb) p.diff_same += 1;
      else p.diff_diff += 1;
    }
  }
  return p;
}

inline bool same_partition(const Labels& a, const Labels& b) {
  std::map<std::size_t, std::size_t> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it, fresh] = ab.emplace(a[i], b[i]);
    if (!fresh && it->second != b[i]) return false;
    auto [jt, fresh2] = ba.emplace(b[i], a[i]);
    if (!fresh2 && jt->second != a[i]) return false;
  }
  return true;
}

inline double rand_index(const Labels& a, const Labels& b) {
  const PairCounts p = pair_counts(a, b);
  return (p.same_same + p.diff_diff) /
         (p.same_same + p.same_diff + p.diff_same + p.diff_diff);
}

// Pair-counting form of the Hubert-Arabie index.
inline double adjusted_rand(const Labels& a, const Labels& b) {
  const PairCounts p = pair_counts(a, b);
  const double num = 2.0 * (p.same_same * p.diff_diff - p.same_diff * p.diff_same);
  const double den = (p.same_same + p.same_diff) * (p.same_diff + p.diff_diff) +
                     (p.same_same + p.diff_same) * (p.diff_same + p.diff_diff);
  if (den == 0.0) return same_partition(a, b) ? 1.0 : 0.0;
  return num / den;
}

inline double entropy(const Labels& a) {
  std::map<std::size_t, double> counts;
  for (const auto l : a) counts[l] += 1;
  double h = 0;
  const double n = static_cast<double>(a.size());
  for (const auto& [l, c] : counts) h -= (c / n) * std::log2(c / n);
  return h;
}

inline double mutual_information(const Labels& a, const Labels& b) {
  std::map<std::pair<std::size_t, std::size_t>, double> joint;
  std::map<std::size_t, double> ca, cb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1;
    ca[a[i]] += 1;
    cb[b[i]] += 1;
  }
  const double n = static_cast<double>(a.size());
  double mi = 0;
  for (const auto& [key, c] : joint) {
    mi += (c / n) * std::log2((c / n) / ((ca[key.first] / n) * (cb[key.second] / n)));
  }
  return mi;
}

inline double nmi(const Labels& a, const Labels& b) {
  const double ha = entropy(a);
  const double hb = entropy(b);
  if (ha == 0.0 || hb == 0.0) return same_partition(a, b) ? 1.0 : 0.0;
  return std::min(1.0, mutual_information(a, b) / std::sqrt(ha * hb));
}

inline Labels random_labels(std::mt19937_64& gen, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<std::size_t> dist(0, k - 1);
  Labels out(n);
  for (auto& l : out) l = dist(gen);
  return out;
}

struct SignedRankTail {
  double statistic = 0;
  double p_greater = 0;
  double p_less = 0;
  double p_two_sided = 0;
};

// Full 2^n enumeration of sign assignments over the midranks of |x - y|.
inline SignedRankTail signed_rank_enumeration(const std::vector<double>& x,
                                              const std::vector<double>& y) {
  std::vector<double> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) d.push_back(x[i] - y[i]);
  }
  const std::size_t n = d.size();
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    double below = 0, equal = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(d[j]) < std::abs(d[i])) below += 1;
      if (std::abs(d[j]) == std::abs(d[i])) equal += 1;
    }
    rank[i] = below + (equal + 1) / 2;
  }
  SignedRankTail t;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] > 0) t.statistic += rank[i];
  }
  double ge = 0, le = 0;
  const std::uint64_t patterns = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    double w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) w += rank[i];
    }
    if (w >= t.statistic - 1e-9) ge += 1;
    if (w <= t.statistic + 1e-9) le += 1;
  }
  t.p_greater = ge / static_cast<double>(patterns);
  t.p_less = le / static_cast<double>(patterns);
  t.p_two_sided = std::min(1.0, 2.0 * std::min(t.p_greater, t.p_less));
  return t;
}

}  // namespace oracle
