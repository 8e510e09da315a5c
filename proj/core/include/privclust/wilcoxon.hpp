#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace privclust {

enum class Alternative { TwoSided, Greater, Less };
enum class WilcoxonMethod { Exact, Normal };

std::string_view alternative_name(Alternative a);
std::optional<Alternative> parse_alternative(std::string_view name);

struct WilcoxonOptions {
  // Unset: exact when n_effective <= exact_threshold and |d| has no ties.
  std::optional<WilcoxonMethod> method;
  std::size_t exact_threshold = 20;
};

struct WilcoxonResult {
  // Sum of ranks of the positive differences x - y.
  double statistic = 0.0;
  std::size_t n_effective = 0;
  double p_value = 1.0;
  Alternative alternative = Alternative::TwoSided;
  WilcoxonMethod method = WilcoxonMethod::Exact;
  bool ties = false;
};

// Paired signed-rank test of x - y. Zero differences are dropped; ties in |d|
// get average ranks. "greater" tests a shift of x to the right of y. The
// normal approximation uses tie and continuity corrections. Throws
// DegenerateInput when every difference is zero.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    Alternative alternative,
                                    const WilcoxonOptions& options = {});

}  // namespace privclust
