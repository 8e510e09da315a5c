#include "privclust/consensus.hpp"

#include <string>

#include "privclust/errors.hpp"
#include "privclust/parallel.hpp"
#include "privclust/random.hpp"
#include "privclust/validity.hpp"

namespace privclust {

std::uint64_t technical_run_seed(const ConsensusConfig& config, std::size_t run) {
  return derive_seed(config.master_seed, "tech", run);
}

std::uint64_t privileged_run_seed(const ConsensusConfig& config, std::size_t run) {
  return config.mirror_streams ? technical_run_seed(config, run)
                               : derive_seed(config.master_seed, "priv", run);
}

void generate_runs(const DataMatrix& x, const DataMatrix& xp, const ConsensusConfig& config,
                   ConsensusTrace& trace) {
  if (x.rows() != xp.rows()) {
    throw InvalidArgument("consensus: X has " + std::to_string(x.rows()) + " rows, X* has " +
                          std::to_string(xp.rows()));
  }
  if (config.runs < 1) throw InvalidArgument("consensus: runs must be at least 1");
  const std::size_t runs = config.runs;
  trace.technical.assign(runs, {});
  trace.privileged.assign(runs, {});
  // Slots [0, runs) cluster X, [runs, 2 runs) cluster X*.
  parallel_for(
      2 * runs,
      [&](std::size_t slot) {
        const bool privileged = slot >= runs;
        const std::size_t r = privileged ? slot - runs : slot;
        const ClustererSpec& spec = privileged ? config.privileged : config.technical;
        ClustererConfig cfg = spec.config;
        cfg.seed = privileged ? privileged_run_seed(config, r) : technical_run_seed(config, r);
        ClusteringResult res = run_clusterer(spec.algorithm, privileged ? xp : x, cfg);
        (privileged ? trace.privileged : trace.technical)[r] = std::move(res);
      },
      config.threads);
}

BestPair best_pair(const std::vector<ClusteringResult>& technical,
                   const std::vector<ClusteringResult>& privileged, AgreementMeasure measure,
                   std::vector<double>* agreement) {
  if (technical.empty() || privileged.empty()) {
    throw InvalidArgument("best_pair: both clustering lists must be nonempty");
  }
  const std::size_t cols = privileged.size();
  if (agreement) agreement->assign(technical.size() * cols, 0.0);
  BestPair best;
  bool first = true;
  for (std::size_t i = 0; i < technical.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double s = measure == AgreementMeasure::AdjustedRand
                           ? adjusted_rand(technical[i].labels, privileged[j].labels)
                           : nmi(technical[i].labels, privileged[j].labels);
      if (agreement) (*agreement)[i * cols + j] = s;
      // Strict comparison keeps the lexicographically first maximum.
      if (first || s > best.score) {
        best = {i, j, s};
        first = false;
      }
    }
  }
  return best;
}

BestPair best_by_nmi(const std::vector<ClusteringResult>& technical,
                     const std::vector<ClusteringResult>& privileged) {
  return best_pair(technical, privileged, AgreementMeasure::Nmi);
}

ArimaxResult arimax(const DataMatrix& x, const DataMatrix& xp, const ConsensusConfig& config) {
  ArimaxResult out;
  generate_runs(x, xp, config, out.trace);
  const BestPair best =
      best_pair(out.trace.technical, out.trace.privileged, config.measure, &out.trace.agreement);
  out.trace.technical_index = best.technical_index;
  out.trace.privileged_index = best.privileged_index;
  out.trace.score = best.score;
  out.result = out.trace.technical[best.technical_index];
  return out;
}

}  // namespace privclust
