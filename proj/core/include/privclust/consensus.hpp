#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "privclust/clusterer.hpp"

namespace privclust {

enum class AgreementMeasure { AdjustedRand, Nmi };

struct ConsensusConfig {
  std::size_t runs = 100;
  ClustererSpec technical;
  ClustererSpec privileged;
  std::uint64_t master_seed = 0;
  AgreementMeasure measure = AgreementMeasure::AdjustedRand;
  // Privileged run r reuses the technical stream of run r instead of its own.
  bool mirror_streams = false;
  // 0 = hardware concurrency.
  std::size_t threads = 0;
};

struct ConsensusTrace {
  std::vector<ClusteringResult> technical;
  std::vector<ClusteringResult> privileged;
  // runs x runs, agreement(technical i, privileged j) row-major.
  std::vector<double> agreement;
  std::size_t technical_index = 0;
  std::size_t privileged_index = 0;
  double score = 0.0;

  double at(std::size_t i, std::size_t j) const { return agreement[i * privileged.size() + j]; }
};

struct BestPair {
  std::size_t technical_index = 0;
  std::size_t privileged_index = 0;
  double score = 0.0;
};

// Seeds of run r: derive_seed(master, "tech", r) and derive_seed(master,
// "priv", r).
std::uint64_t technical_run_seed(const ConsensusConfig& config, std::size_t run);
std::uint64_t privileged_run_seed(const ConsensusConfig& config, std::size_t run);

// Clusters X and X* config.runs times each (the trace's technical and
// privileged lists).
void generate_runs(const DataMatrix& x, const DataMatrix& xp, const ConsensusConfig& config,
                   ConsensusTrace& trace);

// Exhaustive pairwise scan. Ties go to the lexicographically smallest
// (technical, privileged) index pair.
BestPair best_pair(const std::vector<ClusteringResult>& technical,
                   const std::vector<ClusteringResult>& privileged, AgreementMeasure measure,
                   std::vector<double>* agreement = nullptr);

BestPair best_by_nmi(const std::vector<ClusteringResult>& technical,
                     const std::vector<ClusteringResult>& privileged);

struct ArimaxResult {
  ClusteringResult result;
  ConsensusTrace trace;
};

// Returns the unmodified technical clustering whose agreement with some
// privileged clustering is maximal.
ArimaxResult arimax(const DataMatrix& x, const DataMatrix& xp, const ConsensusConfig& config);

}  // namespace privclust
