#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "privclust/clusterer.hpp"
#include "privclust/consensus.hpp"

namespace privclust {

// |Z - assigned| / |Z - other| where Z is x projected onto the line through
// the two centroids. Smaller means x sits more firmly in its cluster.
// Returns +inf when Z coincides with `other`; throws DegenerateInput when the
// centroids coincide.
double rd_ratio(std::span<const double> x, std::span<const double> assigned,
                std::span<const double> other);

struct AlignedPair {
  // True when privileged id 0 corresponds to technical id 1.
  bool swapped = false;
  std::vector<std::size_t> matches;
  std::vector<std::size_t> differences;
};

// Chooses the identity or swapped mapping of the privileged ids (k = 2) that
// minimises disagreements with the technical labels; ties keep the identity.
AlignedPair align_labels(const ClusteringResult& technical, const ClusteringResult& privileged);

// Appends k indicator columns to x_norm: column j is 1 where labels == j and 0
// elsewhere.
DataMatrix fuse_consensus_attributes(const DataMatrix& x_norm,
                                     std::span<const std::size_t> labels, std::size_t k);

struct PdotConfig {
  std::size_t iter = 100;
  ClustererSpec base;
  Algorithm final_algorithm = Algorithm::KMeans;
  std::uint64_t master_seed = 0;
  // Reuse the technical seed streams on X* (self-consensus checks).
  bool mirror_streams = false;
  // Reduce normalised X to this many principal components before consensus.
  std::optional<std::size_t> pca_components;
  bool record_ratios = false;
  std::size_t threads = 0;
};

struct InstanceRatio {
  std::size_t index = 0;
  double technical = 0.0;
  double privileged = 0.0;
  bool swapped = false;
};

struct PdotTrace {
  BestPair best;
  double best_technical_entropy = 0.0;
  double best_privileged_entropy = 0.0;
  // NMI(best) < min(H(tech), H(priv)), evaluated as written in the algorithm.
  bool literal_gate = false;
  // Fusion ran: the best partitions differ.
  bool gate_open = false;
  bool mapping_swapped = false;
  std::size_t working_set_size = 0;
  std::size_t swap_count = 0;
  std::vector<std::size_t> swapped_indices;
  // Technical labels after the swap step, before binding.
  Labels fused_labels;
  std::vector<InstanceRatio> ratios;  // only with record_ratios
  std::uint64_t final_seed = 0;
  ConsensusTrace consensus;
};

struct PdotResult {
  ClusteringResult result;
  PdotTrace trace;
};

// Consensus by NMI, ratio-driven label swaps on the disagreement set,
// indicator binding and a final re-clustering. Only k = 2 is supported.
PdotResult pdot(const DataMatrix& x, const DataMatrix& xp, const PdotConfig& config);

// pdot with the EM mixture as the final clusterer.
PdotResult pdot_em(const DataMatrix& x, const DataMatrix& xp, PdotConfig config);

}  // namespace privclust
