#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "privclust/wilcoxon.hpp"

namespace privclust {

// Table-style column statistics. stdev uses the n - 1 denominator (0 for a
// single value); median averages the middle pair for even counts.
struct Summary {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double median = 0.0;
  double stdev = 0.0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

Summary summarize(std::span<const double> values);

struct RunRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double objective = 0.0;
  std::optional<double> ari;
  std::optional<double> nmi;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct HypothesisTest {
  Alternative alternative = Alternative::TwoSided;
  double p_value = 1.0;
  bool reject = false;

  friend bool operator==(const HypothesisTest&, const HypothesisTest&) = default;
};

// Paired comparison of two methods' per-run scores under all three
// hypotheses (R1 = R2, R1 < R2, R1 > R2).
struct PairwiseComparison {
  std::string first;
  std::string second;
  std::string metric;
  // All differences were zero; no test was possible.
  bool degenerate = false;
  double statistic = 0.0;
  std::size_t n_effective = 0;
  WilcoxonMethod method = WilcoxonMethod::Normal;
  std::vector<HypothesisTest> hypotheses;

  friend bool operator==(const PairwiseComparison&, const PairwiseComparison&) = default;
};

// Ordered key/value snapshot of the configuration that produced a report.
using ConfigSnapshot = std::vector<std::pair<std::string, std::string>>;

struct ExperimentReport {
  std::string method;
  std::string dataset;
  std::vector<RunRecord> runs;
  Summary objective;
  std::optional<Summary> ari;
  std::optional<Summary> nmi;
  std::vector<PairwiseComparison> comparisons;
  ConfigSnapshot config;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

// Fills the summaries from the runs. Throws InvalidArgument("no runs") when
// runs is empty.
void finalize_summaries(ExperimentReport& report);

struct ComparisonRow {
  std::string method;
  std::size_t runs = 0;
  std::optional<Summary> ari;
  std::optional<Summary> nmi;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct ComparisonReport {
  std::string dataset;
  double significance = 0.05;
  std::vector<ComparisonRow> rows;
  std::vector<PairwiseComparison> comparisons;
  ConfigSnapshot config;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

// Wilcoxon at `significance` for x vs y under all three alternatives.
PairwiseComparison compare_scores(const std::string& first, std::span<const double> x,
                                  const std::string& second, std::span<const double> y,
                                  const std::string& metric, double significance = 0.05);

std::string format_report(const ExperimentReport& report);
ExperimentReport parse_report(std::string_view text);
void write_report(const ExperimentReport& report, const std::filesystem::path& path);
ExperimentReport read_report(const std::filesystem::path& path);

std::string format_comparison(const ComparisonReport& report);
ComparisonReport parse_comparison(std::string_view text);
void write_comparison(const ComparisonReport& report, const std::filesystem::path& path);
ComparisonReport read_comparison(const std::filesystem::path& path);

// Min/Max/Mean/Median/St.Dev. table, one row per method, for the NMI (or ARI)
// column.
std::string format_comparison_table(const ComparisonReport& report, bool use_nmi = true);

}  // namespace privclust
