#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "privclust/clusterer.hpp"
#include "privclust/datagen.hpp"
#include "privclust/report.hpp"

namespace privclust {

enum class Method { KMeansX, KMeansFused, Arimax, Pdot, PdotEm, Em, Spectral, Som, Som2k };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
std::vector<Method> all_methods();

struct Preprocessing {
  bool normalize = false;
  std::optional<std::size_t> pca;
};

struct ExperimentPlan {
  // Either a preset name or explicit files.
  std::string preset;
  std::optional<std::uint64_t> data_seed;
  std::filesystem::path x_path;
  std::filesystem::path xp_path;
  std::optional<std::filesystem::path> truth_path;

  std::vector<Method> methods;
  std::size_t repetitions = 100;
  std::size_t k = 2;
  // Clusterings per view inside aRi-MAX and P-Dot.
  std::size_t consensus_runs = 100;
  Preprocessing preprocessing;
  std::uint64_t master_seed = 0;
  std::size_t threads = 0;
};

ConfigSnapshot plan_snapshot(const ExperimentPlan& plan);
// Inverse of plan_snapshot; unknown keys are rejected.
ExperimentPlan plan_from_snapshot(const ConfigSnapshot& snapshot);

std::string dataset_id(const ExperimentPlan& plan);
PairedDataset load_plan_dataset(const ExperimentPlan& plan);

// The matrices each method family sees after preprocessing.
struct PreparedData {
  DataMatrix technical;   // X, normalised if requested, PCA-reduced if requested
  DataMatrix privileged;  // X*, normalised if requested
  DataMatrix fused;       // X + X*, normalised if requested, PCA-reduced if requested
  // P-Dot applies PCA itself after normalising X.
  DataMatrix pdot_technical;
  std::optional<Labels> truth;
};

PreparedData prepare(const PairedDataset& data, const Preprocessing& pre);

std::uint64_t repetition_seed(std::uint64_t master, Method method, std::size_t repetition);

// One repetition of one method.
ClusteringResult run_method(Method method, const PreparedData& data, const ExperimentPlan& plan,
                            std::size_t repetition);

struct ExperimentOutcome {
  std::vector<ExperimentReport> reports;
  ComparisonReport comparison;
};

ExperimentOutcome run_plan(const ExperimentPlan& plan, const PairedDataset& data);
ExperimentOutcome run_plan(const ExperimentPlan& plan);

// <dir>/<method>.json per method, <dir>/comparison.json, <dir>/comparison.csv.
void write_outcome(const ExperimentOutcome& outcome, const std::filesystem::path& dir);

// Writes X.csv, Xp.csv and truth.csv.
void cmd_gen(std::string_view preset, std::optional<std::uint64_t> seed,
             const std::filesystem::path& out_dir);

// Compares the per-run scores of two reports (metric "nmi" or "ari").
// Throws InvalidArgument on mismatched run counts, DegenerateInput when all
// paired differences are zero.
PairwiseComparison cmd_stats(const ExperimentReport& a, const ExperimentReport& b,
                             std::string_view metric = "nmi", double significance = 0.05);

}  // namespace privclust
