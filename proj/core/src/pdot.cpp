#include "privclust/pdot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "privclust/errors.hpp"
#include "privclust/geometry.hpp"
#include "privclust/normalize.hpp"
#include "privclust/pca.hpp"
#include "privclust/random.hpp"
#include "privclust/validity.hpp"

namespace privclust {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void require_two_clusters(const ClusteringResult& r, const char* who) {
  if (r.k() != 2) {
    throw Unsupported(std::string(who) + ": only k = 2 is supported, got k = " +
                      std::to_string(r.k()));
  }
}

// A space whose two centroids coincide says nothing about the instance.
double ratio_or_infinity(std::span<const double> x, const Point& assigned, const Point& other) {
  if (squared_distance(assigned, other) == 0.0) return kInfinity;
  return rd_ratio(x, assigned, other);
}

}  // namespace

double rd_ratio(std::span<const double> x, std::span<const double> assigned,
                std::span<const double> other) {
  const Point z = project_onto_line(x, assigned, other);
  const double to_assigned = euclidean_distance(z, assigned);
  const double to_other = euclidean_distance(z, other);
  if (to_other == 0.0) return kInfinity;
  return to_assigned / to_other;
}

AlignedPair align_labels(const ClusteringResult& technical, const ClusteringResult& privileged) {
  if (technical.labels.size() != privileged.labels.size()) {
    throw InvalidArgument("align_labels: clusterings cover different numbers of instances");
  }
  require_two_clusters(technical, "align_labels");
  require_two_clusters(privileged, "align_labels");
  const std::size_t n = technical.labels.size();
  std::size_t identity_diff = 0;
  for (std::size_t i = 0; i < n; ++i) identity_diff += technical.labels[i] != privileged.labels[i];

  AlignedPair out;
  out.swapped = n - identity_diff < identity_diff;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t mapped = out.swapped ? 1 - privileged.labels[i] : privileged.labels[i];
    (technical.labels[i] == mapped ? out.matches : out.differences).push_back(i);
  }
  return out;
}

DataMatrix fuse_consensus_attributes(const DataMatrix& x_norm,
                                     std::span<const std::size_t> labels, std::size_t k) {
  if (labels.size() != x_norm.rows()) {
    throw InvalidArgument("fuse_consensus_attributes: " + std::to_string(labels.size()) +
                          " labels for " + std::to_string(x_norm.rows()) + " rows");
  }
  const std::size_t d = x_norm.cols();
  DataMatrix out(x_norm.rows(), d + k, 0.0);
  for (std::size_t r = 0; r < x_norm.rows(); ++r) {
    if (labels[r] >= k) {
      throw InvalidArgument("fuse_consensus_attributes: label " + std::to_string(labels[r]) +
                            " outside [0, " + std::to_string(k) + ")");
    }
    const auto src = x_norm.row(r);
    auto dst = out.row(r);
    std::copy(src.begin(), src.end(), dst.begin());
    dst[d + labels[r]] = 1.0;
  }
  return out;
}

PdotResult pdot(const DataMatrix& x, const DataMatrix& xp, const PdotConfig& config) {
  if (x.rows() != xp.rows()) {
    throw InvalidArgument("pdot: X has " + std::to_string(x.rows()) + " rows, X* has " +
                          std::to_string(xp.rows()));
  }
  if (config.base.config.k != 2) {
    throw Unsupported("pdot: only k = 2 is supported, got k = " +
                      std::to_string(config.base.config.k));
  }
  if (config.iter < 1) throw InvalidArgument("pdot: iter must be at least 1");

  DataMatrix technical = x;
  if (config.pca_components) {
    const DataMatrix normalized = minmax_normalize(x);
    technical = pca_transform(pca_fit(normalized, *config.pca_components), normalized);
  }

  PdotResult out;
  PdotTrace& trace = out.trace;

  ConsensusConfig consensus;
  consensus.runs = config.iter;
  consensus.technical = config.base;
  consensus.privileged = config.base;
  consensus.master_seed = config.master_seed;
  consensus.measure = AgreementMeasure::Nmi;
  consensus.mirror_streams = config.mirror_streams;
  consensus.threads = config.threads;
  generate_runs(technical, xp, consensus, trace.consensus);
  trace.best = best_pair(trace.consensus.technical, trace.consensus.privileged,
                         AgreementMeasure::Nmi, &trace.consensus.agreement);
  trace.consensus.technical_index = trace.best.technical_index;
  trace.consensus.privileged_index = trace.best.privileged_index;
  trace.consensus.score = trace.best.score;

  const ClusteringResult& tech_best = trace.consensus.technical[trace.best.technical_index];
  const ClusteringResult& priv_best = trace.consensus.privileged[trace.best.privileged_index];
  trace.best_technical_entropy = entropy(tech_best.labels);
  trace.best_privileged_entropy = entropy(priv_best.labels);
  trace.literal_gate =
      trace.best.score < std::min(trace.best_technical_entropy, trace.best_privileged_entropy);
  trace.gate_open = !same_partition(tech_best.labels, priv_best.labels);

  if (!trace.gate_open) {
    trace.fused_labels = tech_best.labels;
    out.result = tech_best;
    return out;
  }

  // After alignment the disagreements are never the larger set, so they are
  // the working set.
  const AlignedPair aligned = align_labels(tech_best, priv_best);
  trace.mapping_swapped = aligned.swapped;
  trace.working_set_size = aligned.differences.size();

  Labels fused = tech_best.labels;
  for (const std::size_t i : aligned.differences) {
    const std::size_t t = tech_best.labels[i];
    const std::size_t p = priv_best.labels[i];
    const double tech_ratio =
        ratio_or_infinity(technical.row(i), tech_best.centroids[t], tech_best.centroids[1 - t]);
    const double priv_ratio =
        ratio_or_infinity(xp.row(i), priv_best.centroids[p], priv_best.centroids[1 - p]);
    // Higher ratio = less confident. +inf loses to any finite ratio; two
    // infinities compare equal and leave the label alone.
    const bool swap = tech_ratio > priv_ratio;
    if (swap) {
      fused[i] = 1 - fused[i];
      trace.swapped_indices.push_back(i);
    }
    if (config.record_ratios) trace.ratios.push_back({i, tech_ratio, priv_ratio, swap});
  }
  trace.swap_count = trace.swapped_indices.size();
  trace.fused_labels = fused;

  const DataMatrix augmented = fuse_consensus_attributes(minmax_normalize(technical), fused, 2);
  ClustererConfig final_config = config.base.config;
  final_config.seed = derive_seed(config.master_seed, "final");
  trace.final_seed = final_config.seed;
  out.result = run_clusterer(config.final_algorithm, augmented, final_config);
  return out;
}

PdotResult pdot_em(const DataMatrix& x, const DataMatrix& xp, PdotConfig config) {
  config.final_algorithm = Algorithm::Em;
  return pdot(x, xp, config);
}

}  // namespace privclust
