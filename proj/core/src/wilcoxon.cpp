#include "privclust/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "privclust/errors.hpp"

namespace privclust {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Exact null distribution of the doubled rank sum: every (doubled) rank
// enters with + or - sign independently with probability 1/2. Counts are
// accumulated as doubles, which stay exact up to 2^53 patterns.
std::vector<double> doubled_rank_sum_counts(const std::vector<std::uint64_t>& doubled_ranks) {
  const std::uint64_t total = std::accumulate(doubled_ranks.begin(), doubled_ranks.end(),
                                              std::uint64_t{0});
  std::vector<double> counts(total + 1, 0.0);
  counts[0] = 1.0;
  std::uint64_t reach = 0;
  for (const std::uint64_t r : doubled_ranks) {
    for (std::uint64_t s = reach + 1; s-- > 0;) {
      if (counts[s] != 0.0) counts[s + r] += counts[s];
    }
    reach += r;
  }
  return counts;
}

}  // namespace

std::string_view alternative_name(Alternative a) {
  switch (a) {
    case Alternative::TwoSided: return "two-sided";
    case Alternative::Greater: return "greater";
    case Alternative::Less: return "less";
  }
  return "two-sided";
}

std::optional<Alternative> parse_alternative(std::string_view name) {
  for (const Alternative a : {Alternative::TwoSided, Alternative::Greater, Alternative::Less}) {
    if (alternative_name(a) == name) return a;
  }
  return std::nullopt;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    Alternative alternative, const WilcoxonOptions& options) {
  if (x.size() != y.size()) {
    throw InvalidArgument("wilcoxon_signed_rank: samples differ in length (" +
                          std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw InvalidArgument("wilcoxon_signed_rank: needs at least 2 pairs");

  std::vector<double> diffs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d != 0.0) diffs.push_back(d);
  }
  const std::size_t n = diffs.size();
  if (n == 0) throw DegenerateInput("degenerate: no nonzero pairs");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(diffs[a]) < std::abs(diffs[b]);
  });

  // Doubled average ranks keep tied ranks integral.
  std::vector<std::uint64_t> doubled(n);
  double tie_term = 0.0;
  bool ties = false;
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && std::abs(diffs[order[end]]) == std::abs(diffs[order[start]])) ++end;
    const std::uint64_t group = end - start;
    // ranks start+1 .. end, average (start + 1 + end) / 2
    const std::uint64_t doubled_rank = start + 1 + end;
    for (std::size_t k = start; k < end; ++k) doubled[order[k]] = doubled_rank;
    if (group > 1) {
      ties = true;
      const double t = static_cast<double>(group);
      tie_term += t * t * t - t;
    }
    start = end;
  }

  std::uint64_t w_doubled = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (diffs[i] > 0.0) w_doubled += doubled[i];
  }

  WilcoxonResult result;
  result.statistic = static_cast<double>(w_doubled) / 2.0;
  result.n_effective = n;
  result.alternative = alternative;
  result.ties = ties;
  result.method = options.method.value_or(
      n <= options.exact_threshold && !ties ? WilcoxonMethod::Exact : WilcoxonMethod::Normal);

  double p_greater = 1.0;
  double p_less = 1.0;
  if (result.method == WilcoxonMethod::Exact) {
    if (n > 62) throw InvalidArgument("wilcoxon_signed_rank: exact method limited to n <= 62");
    const std::vector<double> counts = doubled_rank_sum_counts(doubled);
    const double patterns = std::ldexp(1.0, static_cast<int>(n));
    double upper = 0.0;
    double lower = 0.0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
      if (s >= w_doubled) upper += counts[s];
      if (s <= w_doubled) lower += counts[s];
    }
    p_greater = upper / patterns;
    p_less = lower / patterns;
  } else {
    const double nn = static_cast<double>(n);
    const double mean = nn * (nn + 1.0) / 4.0;
    const double variance = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
    const double sd = std::sqrt(variance);
    const double w = result.statistic;
    p_greater = 1.0 - normal_cdf((w - mean - 0.5) / sd);
    p_less = normal_cdf((w - mean + 0.5) / sd);
    if (alternative == Alternative::TwoSided) {
      const double diff = w - mean;
      const double correction = diff > 0.0 ? 0.5 : (diff < 0.0 ? -0.5 : 0.0);
      const double z = (diff - correction) / sd;
      result.p_value = std::min(1.0, 2.0 * std::min(normal_cdf(z), 1.0 - normal_cdf(z)));
      return result;
    }
  }

  switch (alternative) {
    case Alternative::Greater: result.p_value = std::min(1.0, p_greater); break;
    case Alternative::Less: result.p_value = std::min(1.0, p_less); break;
    case Alternative::TwoSided:
      result.p_value = std::min(1.0, 2.0 * std::min(p_greater, p_less));
      break;
  }
  return result;
}

}  // namespace privclust
