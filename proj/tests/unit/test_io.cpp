#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "privclust/csv.hpp"
#include "privclust/errors.hpp"
#include "privclust/preset.hpp"
#include "privclust/report.hpp"

using namespace privclust;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "privclust-test-io";
  fs::create_directories(dir);
  return dir / name;
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

ExperimentReport sample_report() {
  ExperimentReport r;
  r.method = "pdot";
  r.dataset = "gaussian-d02";
  for (std::size_t i = 0; i < 5; ++i) {
    RunRecord rec;
    rec.index = i;
    rec.seed = 0xFFFFFFFFFFFFFFF0ull + i;
    rec.objective = 10.0 / 3.0 + static_cast<double>(i);
    rec.ari = 0.1 * static_cast<double>(i) + 1e-17;
    rec.nmi = 1.0 / (1.0 + static_cast<double>(i));
    r.runs.push_back(rec);
  }
  const std::vector<double> a{0.1, 0.4, 0.3, 0.9, 0.5};
  const std::vector<double> b{0.2, 0.1, 0.3, 0.2, 0.6};
  r.comparisons.push_back(compare_scores("pdot", a, "arimax", b, "nmi"));
  r.config = {{"preset", "gaussian-d02"}, {"repetitions", "5"}};
  finalize_summaries(r);
  return r;
}

}  // namespace

TEST(Csv, ParsesSimpleMatrix) {
  EXPECT_EQ(parse_matrix("1,2\n3,4"), DataMatrix::from_rows({{1, 2}, {3, 4}}));
  EXPECT_EQ(parse_matrix("a,b\r\n1, 2\r\n3,4\r\n\n"), DataMatrix::from_rows({{1, 2}, {3, 4}}));
  CsvOptions absent;
  absent.header = HeaderMode::Absent;
  EXPECT_THROW(parse_matrix("a,b\n1,2", absent), ParseError);
  CsvOptions present;
  present.header = HeaderMode::Present;
  EXPECT_EQ(parse_matrix("1,2\n3,4", present), DataMatrix::from_rows({{3, 4}}));
}

TEST(Csv, ErrorsNameTheLocation) {
  EXPECT_NE(error_of([] { parse_matrix("1,2\n3\n"); }).find("row 2"), std::string::npos);
  const std::string bad = error_of([] { parse_matrix("1,2\n3,x\n"); });
  EXPECT_NE(bad.find("row 2, column 2"), std::string::npos);
  EXPECT_NE(error_of([] { parse_matrix(""); }).find("empty"), std::string::npos);
  EXPECT_THROW(parse_matrix("1,nan\n"), ParseError);
  EXPECT_THROW(parse_matrix("1,inf\n"), ParseError);
}

TEST(Csv, RoundTripIsExact) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> dist(0, 1e3);
  DataMatrix m(20, 7);
  for (std::size_t r = 0; r < 20; ++r) {
    for (std::size_t c = 0; c < 7; ++c) m(r, c) = dist(gen);
  }
  m(0, 0) = 5e-324;
  m(0, 1) = -0.0;
  const fs::path p = scratch("round.csv");
  save_matrix(m, p);
  EXPECT_EQ(load_matrix(p), m);
}

TEST(Csv, WideDigitFile) {
  DataMatrix m(100, 784, 255.0);
  const fs::path p = scratch("digits.csv");
  save_matrix(m, p);
  EXPECT_EQ(load_matrix(p).cols(), 784u);
}

TEST(Csv, Labels) {
  EXPECT_EQ(parse_labels("0\n1\n1\n"), (Labels{0, 1, 1}));
  EXPECT_EQ(parse_labels("label\n2\n0"), (Labels{2, 0}));
  EXPECT_THROW(parse_labels("0\n-1\n"), ParseError);
  EXPECT_THROW(parse_labels("0\n1.5\n"), ParseError);
  const fs::path p = scratch("labels.csv");
  save_labels(Labels{3, 0, 1}, p);
  EXPECT_EQ(load_labels(p), (Labels{3, 0, 1}));
}

TEST(Csv, LoadPaired) {
  const fs::path x = scratch("px.csv"), xp = scratch("pxp.csv"), t = scratch("pt.csv");
  const fs::path short_xp = scratch("pxp_short.csv"), short_t = scratch("pt_short.csv");
  save_matrix(DataMatrix(4, 3, 1.0), x);
  save_matrix(DataMatrix(4, 21, 0.5), xp);
  save_matrix(DataMatrix(3, 21, 0.5), short_xp);
  save_labels(Labels{0, 1, 0, 1}, t);
  save_labels(Labels{0, 1}, short_t);
  const PairedDataset d = load_paired(x, xp, t);
  EXPECT_EQ(d.xp.cols(), 21u);
  EXPECT_EQ(d.truth, (Labels{0, 1, 0, 1}));
  EXPECT_FALSE(load_paired(x, xp, std::nullopt).truth.has_value());
  EXPECT_THROW(load_paired(x, short_xp, std::nullopt), InvalidArgument);
  EXPECT_THROW(load_paired(x, xp, short_t), InvalidArgument);
  EXPECT_THROW(load_matrix(scratch("missing.csv")), IoError);
}

TEST(Report, SummaryColumns) {
  const std::vector<double> v{4, 1, 3, 2};
  const Summary s = summarize(v);
  EXPECT_EQ(s.min, 1);
  EXPECT_EQ(s.max, 4);
  EXPECT_EQ(s.mean, 2.5);
  EXPECT_EQ(s.median, 2.5);
  EXPECT_NEAR(s.stdev, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_EQ(summarize(std::vector<double>{7}).stdev, 0.0);
}

TEST(Report, RoundTrip) {
  const ExperimentReport r = sample_report();
  const fs::path p = scratch("report.json");
  write_report(r, p);
  EXPECT_EQ(read_report(p), r);
  EXPECT_EQ(format_report(parse_report(format_report(r))), format_report(r));
}

TEST(Report, SummaryRecomputableFromRuns) {
  ExperimentReport r = parse_report(format_report(sample_report()));
  const ExperimentReport copy = r;
  finalize_summaries(r);
  EXPECT_EQ(r, copy);
}

TEST(Report, EmptyRunsAndMalformedInput) {
  ExperimentReport r = sample_report();
  r.runs.clear();
  EXPECT_EQ(error_of([&] { format_report(r); }), "no runs");
  EXPECT_EQ(error_of([&] { finalize_summaries(r); }), "no runs");
  EXPECT_THROW(parse_report("{"), ParseError);
  EXPECT_THROW(parse_report("{\"method\": 3}"), ParseError);
  EXPECT_THROW(parse_report("[]"), ParseError);
}

TEST(Report, ComparisonRoundTripAndTable) {
  ComparisonReport c;
  c.dataset = "pointwise-d02";
  const ExperimentReport r = sample_report();
  c.rows.push_back({"pdot", 5, r.ari, r.nmi});
  c.rows.push_back({"kmeans-X", 5, std::nullopt, std::nullopt});
  c.comparisons = r.comparisons;
  c.config = r.config;
  EXPECT_EQ(parse_comparison(format_comparison(c)), c);
  const std::string table = format_comparison_table(c);
  EXPECT_NE(table.find("Min"), std::string::npos);
  EXPECT_NE(table.find("St.Dev."), std::string::npos);
  EXPECT_NE(table.find("pdot"), std::string::npos);
}

TEST(Report, CompareScoresHypotheses) {
  const std::vector<double> hi{0.9, 0.8, 0.85, 0.95, 0.9, 0.88, 0.91, 0.87};
  const std::vector<double> lo{0.5, 0.4, 0.45, 0.55, 0.52, 0.41, 0.6, 0.3};
  const PairwiseComparison c = compare_scores("a", hi, "b", lo, "nmi");
  ASSERT_EQ(c.hypotheses.size(), 3u);
  EXPECT_TRUE(c.hypotheses[0].reject);   // R1 = R2
  EXPECT_FALSE(c.hypotheses[1].reject);  // R1 < R2
  EXPECT_TRUE(c.hypotheses[2].reject);   // R1 > R2
  const PairwiseComparison same = compare_scores("a", hi, "a", hi, "nmi");
  EXPECT_TRUE(same.degenerate);
}

TEST(Preset, FormatParseRoundTrip) {
  const Preset p = load_preset("gaussian-d05");
  const Preset q = parse_preset(format_preset(p));
  EXPECT_EQ(q.synthetic.blob_centers, p.synthetic.blob_centers);
  EXPECT_EQ(q.synthetic.privileged_sigma, p.synthetic.privileged_sigma);
  EXPECT_EQ(q.seed(), p.seed());
  EXPECT_EQ(generate_preset(q).x, generate_preset(p).x);
  EXPECT_THROW(parse_preset("{\"kind\": \"mystery\"}"), ParseError);
  EXPECT_THROW(parse_preset("not json"), ParseError);
}

TEST(Preset, BundledPresetsAndUnknownNames) {
  const auto names = list_presets();
  for (const char* n : {"gaussian-d02", "gaussian-d05", "pointwise-d02", "pointwise-d05",
                        "digit-standin"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
  const std::string msg = error_of([] { load_preset("no-such-preset"); });
  EXPECT_NE(msg.find("no-such-preset"), std::string::npos);
  EXPECT_NE(msg.find("gaussian-d02"), std::string::npos);
}

TEST(Preset, EnvironmentOverridesSearchPath) {
  const fs::path dir = scratch("presets");
  fs::create_directories(dir);
  Preset p = load_preset("pointwise-d02");
  p.name = "custom";
  write_text_file(dir / "custom.json", format_preset(p));
  ::setenv("PRIVCLUST_PRESET_DIR", dir.c_str(), 1);
  EXPECT_EQ(list_presets(), (std::vector<std::string>{"custom"}));
  EXPECT_EQ(load_preset("custom").name, "custom");
  EXPECT_THROW(load_preset("gaussian-d02"), InvalidArgument);
  ::unsetenv("PRIVCLUST_PRESET_DIR");
  EXPECT_NO_THROW(load_preset("gaussian-d02"));
}
