#include <filesystem>

#include <gtest/gtest.h>

#include "privclust/csv.hpp"
#include "privclust/errors.hpp"
#include "privclust/harness.hpp"
#include "privclust/random.hpp"

using namespace privclust;
namespace fs = std::filesystem;

namespace {

PairedDataset separable(std::uint64_t seed) {
  Rng rng(seed);
  PairedDataset d;
  d.x = DataMatrix(40, 2);
  d.xp = DataMatrix(40, 1);
  Labels truth;
  for (std::size_t i = 0; i < 40; ++i) {
    const double c = i < 20 ? 0.0 : 10.0;
    d.x(i, 0) = c + 0.3 * rng.normal();
    d.x(i, 1) = c + 0.3 * rng.normal();
    d.xp(i, 0) = c + 0.3 * rng.normal();
    truth.push_back(i < 20 ? 0 : 1);
  }
  d.truth = truth;
  return d;
}

ExperimentPlan small_plan(std::vector<Method> methods, std::size_t reps) {
  ExperimentPlan p;
  p.preset = "gaussian-d02";
  p.methods = std::move(methods);
  p.repetitions = reps;
  p.consensus_runs = 10;
  p.master_seed = 17;
  return p;
}

}  // namespace

TEST(Harness, MethodNames) {
  EXPECT_EQ(all_methods().size(), 9u);
  for (const Method m : all_methods()) EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_EQ(method_name(Method::KMeansFused), "kmeans-XplusXp");
  EXPECT_FALSE(parse_method("kmeans").has_value());
}

TEST(Harness, SnapshotRoundTrip) {
  ExperimentPlan p = small_plan({Method::Pdot, Method::Em}, 7);
  p.data_seed = 3;
  p.preprocessing.normalize = true;
  p.preprocessing.pca = 2;
  const ExperimentPlan q = plan_from_snapshot(plan_snapshot(p));
  EXPECT_EQ(plan_snapshot(q), plan_snapshot(p));
  EXPECT_THROW(plan_from_snapshot({{"bogus", "1"}}), InvalidArgument);
  EXPECT_THROW(plan_from_snapshot({{"methods", "pdot,nope"}}), InvalidArgument);
}

TEST(Harness, SingleRunOnSeparableBlobs) {
  ExperimentPlan p = small_plan({Method::KMeansX}, 1);
  const ExperimentOutcome o = run_plan(p, separable(2));
  ASSERT_EQ(o.reports.size(), 1u);
  ASSERT_EQ(o.reports[0].runs.size(), 1u);
  EXPECT_EQ(*o.reports[0].runs[0].nmi, 1.0);
  EXPECT_TRUE(o.comparison.comparisons.empty());
}

TEST(Harness, TableThreePlanHasEightRows) {
  const std::vector<Method> methods{Method::KMeansX, Method::KMeansFused, Method::Arimax,
                                    Method::Pdot,    Method::Em,          Method::Spectral,
                                    Method::Som,     Method::Som2k};
  const ExperimentOutcome o = run_plan(small_plan(methods, 3));
  EXPECT_EQ(o.comparison.rows.size(), 8u);
  EXPECT_EQ(o.comparison.comparisons.size(), 28u);
  for (const auto& r : o.reports) EXPECT_EQ(r.comparisons.size(), 7u);
}

TEST(Harness, DeterministicAndIndependentOfOtherMethods) {
  const ExperimentOutcome a = run_plan(small_plan({Method::Pdot, Method::KMeansX}, 4));
  const ExperimentOutcome b = run_plan(small_plan({Method::Pdot, Method::KMeansX}, 4));
  EXPECT_EQ(format_report(a.reports[0]), format_report(b.reports[0]));
  EXPECT_EQ(format_comparison(a.comparison), format_comparison(b.comparison));
  ExperimentPlan threaded = small_plan({Method::KMeansX}, 4);
  threaded.threads = 3;
  const ExperimentOutcome c = run_plan(threaded);
  EXPECT_EQ(c.reports[0].runs, a.reports[1].runs);
}

TEST(Harness, RejectsInvalidPlans) {
  EXPECT_THROW(run_plan(small_plan({}, 2)), InvalidArgument);
  EXPECT_THROW(run_plan(small_plan({Method::KMeansX}, 0)), InvalidArgument);
  ExperimentPlan files = small_plan({Method::KMeansX}, 1);
  files.preset.clear();
  EXPECT_THROW(run_plan(files), InvalidArgument);
  files.x_path = "/nonexistent/X.csv";
  files.xp_path = "/nonexistent/Xp.csv";
  EXPECT_THROW(run_plan(files), IoError);
}

TEST(Harness, GenWritesFilesAndRunReadsThem) {
  const fs::path dir = fs::temp_directory_path() / "privclust-test-harness";
  fs::remove_all(dir);
  cmd_gen("pointwise-d05", std::nullopt, dir);
  ASSERT_TRUE(fs::exists(dir / "X.csv"));
  ASSERT_TRUE(fs::exists(dir / "Xp.csv"));
  ASSERT_TRUE(fs::exists(dir / "truth.csv"));
  EXPECT_THROW(cmd_gen("nope", std::nullopt, dir), InvalidArgument);

  ExperimentPlan p = small_plan({Method::Pdot}, 2);
  p.preset.clear();
  p.x_path = dir / "X.csv";
  p.xp_path = dir / "Xp.csv";
  p.truth_path = dir / "truth.csv";
  const ExperimentOutcome o = run_plan(p);
  write_outcome(o, dir / "out");
  EXPECT_TRUE(fs::exists(dir / "out" / "pdot.json"));
  EXPECT_TRUE(fs::exists(dir / "out" / "comparison.json"));
  EXPECT_TRUE(fs::exists(dir / "out" / "comparison.csv"));
  EXPECT_EQ(read_report(dir / "out" / "pdot.json"), o.reports[0]);
  // The embedded snapshot reproduces the runs.
  const ExperimentPlan again = plan_from_snapshot(o.reports[0].config);
  EXPECT_EQ(run_plan(again).reports[0].runs, o.reports[0].runs);
}

TEST(Harness, WithoutTruthOnlyObjectivesAreReported) {
  PairedDataset d = separable(4);
  d.truth.reset();
  const ExperimentOutcome o = run_plan(small_plan({Method::KMeansX, Method::Em}, 3), d);
  EXPECT_FALSE(o.reports[0].nmi.has_value());
  EXPECT_FALSE(o.reports[0].runs[0].ari.has_value());
  EXPECT_TRUE(o.comparison.comparisons.empty());
}

TEST(Harness, StatsBetweenReports) {
  const ExperimentOutcome o = run_plan(small_plan({Method::Pdot, Method::KMeansX}, 12));
  const PairwiseComparison c = cmd_stats(o.reports[0], o.reports[1]);
  EXPECT_EQ(c.hypotheses.size(), 3u);
  EXPECT_THROW(cmd_stats(o.reports[0], o.reports[0]), DegenerateInput);
  ExperimentReport shorter = o.reports[1];
  shorter.runs.pop_back();
  EXPECT_THROW(cmd_stats(o.reports[0], shorter), InvalidArgument);
  EXPECT_THROW(cmd_stats(o.reports[0], o.reports[1], "f1"), InvalidArgument);
}
