#include <cstdlib>

#include <benchmark/benchmark.h>

#include "privclust/consensus.hpp"
#include "privclust/eigen.hpp"
#include "privclust/kmeans.hpp"
#include "privclust/pca.hpp"
#include "privclust/pdot.hpp"
#include "privclust/preset.hpp"
#include "privclust/random.hpp"
#include "privclust/validity.hpp"
#include "privclust/wilcoxon.hpp"

using namespace privclust;

namespace {

const PairedDataset& gaussian() {
  static const PairedDataset d = [] {
    ::setenv("PRIVCLUST_PRESET_DIR", PRIVCLUST_BENCH_PRESET_DIR, 0);
    return generate_preset(load_preset("gaussian-d02"));
  }();
  return d;
}

DataMatrix random_matrix(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  DataMatrix m(n, d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) m(r, c) = rng.normal();
  }
  return m;
}

void BM_KMeans(benchmark::State& state) {
  const DataMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 8, 1);
  ClustererConfig cfg;
  cfg.k = 4;
  for (auto _ : state) {
    cfg.seed++;
    benchmark::DoNotOptimize(kmeans(m, cfg).objective);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KMeans)->Arg(200)->Arg(2000)->Arg(20000);

void BM_Jacobi(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = rng.normal();
  }
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigen(a).eigenvalues.data());
}
BENCHMARK(BM_Jacobi)->Arg(10)->Arg(50)->Arg(100);

void BM_PcaDual(benchmark::State& state) {
  const DataMatrix m = random_matrix(100, 784, 3);
  for (auto _ : state) benchmark::DoNotOptimize(pca_fit(m, 2).eigenvalues.data());
}
BENCHMARK(BM_PcaDual)->Unit(benchmark::kMillisecond);

void BM_AdjustedRand(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  Labels a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = rng.index(4);
    b[i] = rng.index(4);
  }
  for (auto _ : state) benchmark::DoNotOptimize(adjusted_rand(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AdjustedRand)->Arg(200)->Arg(100000);

void BM_Wilcoxon(benchmark::State& state) {
  Rng rng(5);
  std::vector<double> x(100), y(100);
  for (std::size_t i = 0; i < 100; ++i) {
    x[i] = rng.normal();
    y[i] = rng.normal();
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(wilcoxon_signed_rank(x, y, Alternative::TwoSided).p_value);
  }
}
BENCHMARK(BM_Wilcoxon);

void BM_Arimax(benchmark::State& state) {
  const PairedDataset& d = gaussian();
  ConsensusConfig cfg;
  cfg.runs = static_cast<std::size_t>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) {
    cfg.master_seed++;
    benchmark::DoNotOptimize(arimax(d.x, d.xp, cfg).trace.score);
  }
}
BENCHMARK(BM_Arimax)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Pdot(benchmark::State& state) {
  const PairedDataset& d = gaussian();
  PdotConfig cfg;
  cfg.iter = static_cast<std::size_t>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) {
    cfg.master_seed++;
    benchmark::DoNotOptimize(pdot(d.x, d.xp, cfg).trace.swap_count);
  }
}
BENCHMARK(BM_Pdot)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
