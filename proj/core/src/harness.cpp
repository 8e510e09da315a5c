#include "privclust/harness.hpp"

#include <cstdio>
#include <string>

#include "privclust/consensus.hpp"
#include "privclust/csv.hpp"
#include "privclust/errors.hpp"
#include "privclust/normalize.hpp"
#include "privclust/parallel.hpp"
#include "privclust/pca.hpp"
#include "privclust/pdot.hpp"
#include "privclust/preset.hpp"
#include "privclust/random.hpp"
#include "privclust/validity.hpp"

namespace privclust {

namespace {

constexpr Method kMethods[] = {Method::KMeansX, Method::KMeansFused, Method::Arimax,
                               Method::Pdot,    Method::PdotEm,      Method::Em,
                               Method::Spectral, Method::Som,        Method::Som2k};

std::string join_methods(const std::vector<Method>& methods) {
  std::string out;
  for (const Method m : methods) {
    if (!out.empty()) out += ',';
    out += method_name(m);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("config '" + key + "': not an unsigned integer: '" + value + "'");
  }
}

DataMatrix reduce(const DataMatrix& m, std::size_t components) {
  return pca_transform(pca_fit(m, components), m);
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::KMeansX: return "kmeans-X";
    case Method::KMeansFused: return "kmeans-XplusXp";
    case Method::Arimax: return "arimax";
    case Method::Pdot: return "pdot";
    case Method::PdotEm: return "pdot-em";
    case Method::Em: return "em";
    case Method::Spectral: return "spectral";
    case Method::Som: return "som";
    case Method::Som2k: return "som2k";
  }
  return "kmeans-X";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const Method m : kMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<Method> all_methods() { return {std::begin(kMethods), std::end(kMethods)}; }

ConfigSnapshot plan_snapshot(const ExperimentPlan& plan) {
  ConfigSnapshot s;
  s.emplace_back("preset", plan.preset);
  s.emplace_back("data_seed", plan.data_seed ? std::to_string(*plan.data_seed) : "");
  s.emplace_back("x", plan.x_path.string());
  s.emplace_back("xp", plan.xp_path.string());
  s.emplace_back("truth", plan.truth_path ? plan.truth_path->string() : "");
  s.emplace_back("methods", join_methods(plan.methods));
  s.emplace_back("repetitions", std::to_string(plan.repetitions));
  s.emplace_back("k", std::to_string(plan.k));
  s.emplace_back("consensus_runs", std::to_string(plan.consensus_runs));
  s.emplace_back("normalize", plan.preprocessing.normalize ? "true" : "false");
  s.emplace_back("pca", plan.preprocessing.pca ? std::to_string(*plan.preprocessing.pca) : "");
  s.emplace_back("master_seed", std::to_string(plan.master_seed));
  return s;
}

ExperimentPlan plan_from_snapshot(const ConfigSnapshot& snapshot) {
  ExperimentPlan plan;
  for (const auto& [key, value] : snapshot) {
    if (key == "preset") {
      plan.preset = value;
    } else if (key == "data_seed") {
      if (!value.empty()) plan.data_seed = parse_u64(key, value);
    } else if (key == "x") {
      plan.x_path = value;
    } else if (key == "xp") {
      plan.xp_path = value;
    } else if (key == "truth") {
      if (!value.empty()) plan.truth_path = value;
    } else if (key == "methods") {
      plan.methods.clear();
      std::size_t start = 0;
      while (start <= value.size() && !value.empty()) {
        const auto comma = value.find(',', start);
        const std::string name = value.substr(start, comma - start);
        const auto m = parse_method(name);
        if (!m) throw InvalidArgument("config 'methods': unknown method '" + name + "'");
        plan.methods.push_back(*m);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else if (key == "repetitions") {
      plan.repetitions = parse_u64(key, value);
    } else if (key == "k") {
      plan.k = parse_u64(key, value);
    } else if (key == "consensus_runs") {
      plan.consensus_runs = parse_u64(key, value);
    } else if (key == "normalize") {
      if (value != "true" && value != "false") {
        throw InvalidArgument("config 'normalize': expected true or false");
      }
      plan.preprocessing.normalize = value == "true";
    } else if (key == "pca") {
      if (!value.empty()) plan.preprocessing.pca = parse_u64(key, value);
    } else if (key == "master_seed") {
      plan.master_seed = parse_u64(key, value);
    } else {
      throw InvalidArgument("config: unknown key '" + key + "'");
    }
  }
  return plan;
}

std::string dataset_id(const ExperimentPlan& plan) {
  if (!plan.preset.empty()) {
    return plan.data_seed ? plan.preset + "@" + std::to_string(*plan.data_seed) : plan.preset;
  }
  return plan.x_path.filename().string() + "+" + plan.xp_path.filename().string();
}

PairedDataset load_plan_dataset(const ExperimentPlan& plan) {
  if (!plan.preset.empty()) return generate_preset(load_preset(plan.preset), plan.data_seed);
  if (plan.x_path.empty() || plan.xp_path.empty()) {
    throw InvalidArgument("plan needs a preset or both --x and --xp");
  }
  return load_paired(plan.x_path, plan.xp_path, plan.truth_path);
}

PreparedData prepare(const PairedDataset& data, const Preprocessing& pre) {
  PreparedData out;
  const DataMatrix x = pre.normalize ? minmax_normalize(data.x) : data.x;
  out.privileged = pre.normalize ? minmax_normalize(data.xp) : data.xp;
  out.fused = concat_features(x, out.privileged);
  if (pre.pca) {
    out.technical = reduce(x, *pre.pca);
    out.fused = reduce(out.fused, *pre.pca);
  } else {
    out.technical = x;
  }
  out.pdot_technical = x;
  out.truth = data.truth;
  return out;
}

std::uint64_t repetition_seed(std::uint64_t master, Method method, std::size_t repetition) {
  return derive_seed(master, method_name(method), repetition);
}

ClusteringResult run_method(Method method, const PreparedData& data, const ExperimentPlan& plan,
                            std::size_t repetition) {
  ClustererConfig cfg;
  cfg.k = plan.k;
  cfg.seed = repetition_seed(plan.master_seed, method, repetition);
  switch (method) {
    case Method::KMeansX: return run_clusterer(Algorithm::KMeans, data.technical, cfg);
    case Method::KMeansFused: return run_clusterer(Algorithm::KMeans, data.fused, cfg);
    case Method::Em: return run_clusterer(Algorithm::Em, data.fused, cfg);
    case Method::Spectral: return run_clusterer(Algorithm::Spectral, data.fused, cfg);
    case Method::Som: return run_clusterer(Algorithm::Som, data.fused, cfg);
    case Method::Som2k: return run_clusterer(Algorithm::Som2k, data.fused, cfg);
    case Method::Arimax: {
      ConsensusConfig cc;
      cc.runs = plan.consensus_runs;
      cc.technical = {Algorithm::KMeans, cfg};
      cc.privileged = {Algorithm::KMeans, cfg};
      cc.master_seed = cfg.seed;
      cc.threads = 1;
      return arimax(data.technical, data.privileged, cc).result;
    }
    case Method::Pdot:
    case Method::PdotEm: {
      PdotConfig pc;
      pc.iter = plan.consensus_runs;
      pc.base = {Algorithm::KMeans, cfg};
      pc.master_seed = cfg.seed;
      pc.pca_components = plan.preprocessing.pca;
      pc.threads = 1;
      return method == Method::Pdot ? pdot(data.pdot_technical, data.privileged, pc).result
                                    : pdot_em(data.pdot_technical, data.privileged, pc).result;
    }
  }
  throw InvalidArgument("run_method: unknown method");
}

ExperimentOutcome run_plan(const ExperimentPlan& plan, const PairedDataset& data) {
  if (plan.repetitions < 1) throw InvalidArgument("repetitions must be >= 1");
  if (plan.methods.empty()) throw InvalidArgument("at least one method is required");
  if (data.x.rows() != data.xp.rows()) throw InvalidArgument("X and X* row counts differ");
  if (data.truth && data.truth->size() != data.x.rows()) {
    throw InvalidArgument("truth length differs from the row count");
  }

  const PreparedData prepared = prepare(data, plan.preprocessing);
  const ConfigSnapshot snapshot = plan_snapshot(plan);
  const std::string dataset = dataset_id(plan);

  ExperimentOutcome outcome;
  std::vector<std::vector<double>> nmi_scores;
  for (const Method method : plan.methods) {
    std::vector<RunRecord> runs(plan.repetitions);
    parallel_for(
        plan.repetitions,
        [&](std::size_t rep) {
          const ClusteringResult r = run_method(method, prepared, plan, rep);
          RunRecord& rec = runs[rep];
          rec.index = rep;
          rec.seed = repetition_seed(plan.master_seed, method, rep);
          rec.objective = r.objective;
          if (prepared.truth) {
            rec.ari = adjusted_rand(r.labels, *prepared.truth);
            rec.nmi = nmi(r.labels, *prepared.truth);
          }
        },
        plan.threads);

    ExperimentReport report;
    report.method = std::string(method_name(method));
    report.dataset = dataset;
    report.runs = std::move(runs);
    report.config = snapshot;
    finalize_summaries(report);

    std::vector<double> scores;
    for (const RunRecord& r : report.runs) {
      if (r.nmi) scores.push_back(*r.nmi);
    }
    nmi_scores.push_back(std::move(scores));

    ComparisonRow row;
    row.method = report.method;
    row.runs = report.runs.size();
    row.ari = report.ari;
    row.nmi = report.nmi;
    outcome.comparison.rows.push_back(row);
    outcome.reports.push_back(std::move(report));
  }

  outcome.comparison.dataset = dataset;
  outcome.comparison.config = snapshot;
  if (prepared.truth && plan.repetitions >= 2) {
    for (std::size_t a = 0; a < plan.methods.size(); ++a) {
      for (std::size_t b = a + 1; b < plan.methods.size(); ++b) {
        const PairwiseComparison c = compare_scores(
            outcome.reports[a].method, nmi_scores[a], outcome.reports[b].method, nmi_scores[b],
            "nmi", outcome.comparison.significance);
        outcome.comparison.comparisons.push_back(c);
        outcome.reports[a].comparisons.push_back(c);
        outcome.reports[b].comparisons.push_back(c);
      }
    }
  }
  return outcome;
}

ExperimentOutcome run_plan(const ExperimentPlan& plan) {
  return run_plan(plan, load_plan_dataset(plan));
}

void write_outcome(const ExperimentOutcome& outcome, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const ExperimentReport& r : outcome.reports) write_report(r, dir / (r.method + ".json"));
  write_comparison(outcome.comparison, dir / "comparison.json");

  std::string csv = "method,metric,runs,min,max,mean,median,stdev\n";
  char line[512];
  for (const ComparisonRow& row : outcome.comparison.rows) {
    for (const auto& [metric, summary] : {std::pair{"ari", row.ari}, std::pair{"nmi", row.nmi}}) {
      if (!summary) continue;
      std::snprintf(line, sizeof line, "%s,%s,%zu,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                    row.method.c_str(), metric, row.runs, summary->min, summary->max,
                    summary->mean, summary->median, summary->stdev);
      csv += line;
    }
  }
  write_text_file(dir / "comparison.csv", csv);
}

void cmd_gen(std::string_view preset, std::optional<std::uint64_t> seed,
             const std::filesystem::path& out_dir) {
  const PairedDataset data = generate_preset(load_preset(preset), seed);
  std::filesystem::create_directories(out_dir);
  save_matrix(data.x, out_dir / "X.csv");
  save_matrix(data.xp, out_dir / "Xp.csv");
  if (data.truth) save_labels(*data.truth, out_dir / "truth.csv");
}

PairwiseComparison cmd_stats(const ExperimentReport& a, const ExperimentReport& b,
                             std::string_view metric, double significance) {
  if (metric != "nmi" && metric != "ari") {
    throw InvalidArgument("metric must be 'nmi' or 'ari'");
  }
  if (a.runs.size() != b.runs.size()) {
    throw InvalidArgument("run counts differ: " + std::to_string(a.runs.size()) + " vs " +
                          std::to_string(b.runs.size()));
  }
  auto scores = [&](const ExperimentReport& r) {
    std::vector<double> out;
    for (const RunRecord& run : r.runs) {
      const auto& v = metric == "nmi" ? run.nmi : run.ari;
      if (!v) throw InvalidArgument(r.method + ": runs carry no " + std::string(metric) + " scores");
      out.push_back(*v);
    }
    return out;
  };
  const auto x = scores(a);
  const auto y = scores(b);
  PairwiseComparison c =
      compare_scores(a.method, x, b.method, y, std::string(metric), significance);
  if (c.degenerate) throw DegenerateInput("degenerate: no nonzero pairs");
  return c;
}

}  // namespace privclust
