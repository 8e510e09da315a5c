#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "privclust/csv.hpp"
#include "privclust/errors.hpp"
#include "privclust/harness.hpp"
#include "privclust/normalize.hpp"
#include "privclust/pca.hpp"
#include "privclust/preset.hpp"

namespace pc = privclust;

namespace {

constexpr int kUsage = 1;
constexpr int kDataError = 2;

std::string hypothesis_label(pc::Alternative a) {
  switch (a) {
    case pc::Alternative::TwoSided: return "R1 = R2";
    case pc::Alternative::Less: return "R1 < R2";
    case pc::Alternative::Greater: return "R1 > R2";
  }
  return "";
}

std::vector<pc::Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<pc::Method> out;
  for (const std::string& name : names) {
    if (name == "all") {
      for (const pc::Method m : pc::all_methods()) out.push_back(m);
      continue;
    }
    const auto m = pc::parse_method(name);
    if (!m) {
      std::string known;
      for (const pc::Method k : pc::all_methods()) known += " " + std::string(pc::method_name(k));
      throw pc::InvalidArgument("unknown method '" + name + "'; choose from:" + known);
    }
    out.push_back(*m);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustering with privileged information: data generation, experiments, tests"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a preset dataset as X.csv, Xp.csv, truth.csv");
  std::string gen_preset;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out = ".";
  gen->add_option("--preset", gen_preset, "Preset name")->required();
  gen->add_option("--seed", gen_seed, "Override the preset's data seed");
  gen->add_option("--out", gen_out, "Output directory");

  // presets
  auto* presets = app.add_subcommand("presets", "List the presets on the search path");

  // run
  auto* run = app.add_subcommand("run", "Run methods x repetitions and write reports");
  pc::ExperimentPlan plan;
  std::vector<std::string> method_names{"all"};
  std::optional<std::size_t> pca_components;
  std::string x_path, xp_path, truth_path, run_out = "results";
  bool quiet = false;
  run->add_option("--preset", plan.preset, "Generate the data from this preset");
  run->add_option("--data-seed", plan.data_seed, "Override the preset's data seed");
  run->add_option("--x", x_path, "Technical data CSV");
  run->add_option("--xp", xp_path, "Privileged data CSV");
  run->add_option("--truth", truth_path, "True labels, one per line");
  run->add_option("--methods", method_names, "Methods to run (or 'all')")->delimiter(',');
  run->add_option("--reps", plan.repetitions, "Repetitions per method")
      ->check(CLI::PositiveNumber);
  run->add_option("--k", plan.k, "Number of clusters")->check(CLI::PositiveNumber);
  run->add_option("--runs", plan.consensus_runs, "Clusterings per view inside aRi-MAX and P-Dot")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", plan.master_seed, "Master seed");
  run->add_flag("--normalize", plan.preprocessing.normalize, "Min-max normalise X and X*");
  run->add_option("--pca", pca_components, "Reduce to N principal components")
      ->check(CLI::PositiveNumber);
  run->add_option("--threads", plan.threads, "Worker threads (0 = all cores)");
  run->add_option("--out", run_out, "Output directory for the reports");
  run->add_flag("--quiet", quiet, "Do not print the summary table");

  // stats
  auto* stats = app.add_subcommand("stats", "Wilcoxon signed-rank test between two reports");
  std::string report_a, report_b, metric = "nmi", alternative = "all";
  double significance = 0.05;
  stats->add_option("report_a", report_a, "First report (R1)")->required();
  stats->add_option("report_b", report_b, "Second report (R2)")->required();
  stats->add_option("--metric", metric, "Score to compare")->check(CLI::IsMember({"nmi", "ari"}));
  stats->add_option("--alternative", alternative, "Hypothesis to test")
      ->check(CLI::IsMember({"two-sided", "less", "greater", "all"}));
  stats->add_option("--significance", significance, "Rejection level")
      ->check(CLI::Range(0.0, 1.0));

  // pca
  auto* pca = app.add_subcommand("pca", "Project a CSV matrix onto its principal components");
  std::string pca_in, pca_out;
  std::size_t pca_n = 2;
  bool pca_normalize = false;
  pca->add_option("--x", pca_in, "Input CSV")->required();
  pca->add_option("--pca", pca_n, "Number of components")->check(CLI::PositiveNumber);
  pca->add_flag("--normalize", pca_normalize, "Min-max normalise before PCA");
  pca->add_option("--out", pca_out, "Output CSV (default: stdout)");

  // normalize
  auto* norm = app.add_subcommand("normalize", "Min-max normalise every column of a CSV matrix");
  std::string norm_in, norm_out;
  norm->add_option("--x", norm_in, "Input CSV")->required();
  norm->add_option("--out", norm_out, "Output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) {
      pc::cmd_gen(gen_preset, gen_seed, gen_out);
    } else if (*presets) {
      for (const std::string& name : pc::list_presets()) {
        const pc::Preset p = pc::load_preset(name);
        std::cout << name << "\t" << p.description << "\n";
      }
    } else if (*run) {
      plan.methods = parse_methods(method_names);
      plan.preprocessing.pca = pca_components;
      if (plan.preset.empty()) {
        if (x_path.empty() || xp_path.empty()) {
          throw pc::InvalidArgument("run: give --preset or both --x and --xp");
        }
        plan.x_path = x_path;
        plan.xp_path = xp_path;
        if (!truth_path.empty()) plan.truth_path = truth_path;
      } else if (!x_path.empty() || !xp_path.empty()) {
        throw pc::InvalidArgument("run: --preset excludes --x/--xp");
      }
      const pc::ExperimentOutcome outcome = pc::run_plan(plan);
      pc::write_outcome(outcome, run_out);
      if (!quiet) {
        const bool has_truth = !outcome.comparison.rows.empty() &&
                               outcome.comparison.rows.front().nmi.has_value();
        if (has_truth) {
          std::cout << "NMI vs truth on " << outcome.comparison.dataset << "\n"
                    << pc::format_comparison_table(outcome.comparison);
        } else {
          std::cout << "no truth labels; reports carry objectives only\n";
        }
      }
    } else if (*stats) {
      const pc::ExperimentReport a = pc::read_report(report_a);
      const pc::ExperimentReport b = pc::read_report(report_b);
      const pc::PairwiseComparison c = pc::cmd_stats(a, b, metric, significance);
      std::printf("R1 = %s, R2 = %s, metric %s, W = %g, n = %zu, %s\n", c.first.c_str(),
                  c.second.c_str(), c.metric.c_str(), c.statistic, c.n_effective,
                  c.method == pc::WilcoxonMethod::Exact ? "exact" : "normal approximation");
      std::printf("%-10s %12s %8s\n", "hypothesis", "p-value", "reject?");
      for (const pc::HypothesisTest& h : c.hypotheses) {
        if (alternative != "all" && pc::alternative_name(h.alternative) != alternative) continue;
        std::printf("%-10s %12.4e %8s\n", hypothesis_label(h.alternative).c_str(), h.p_value,
                    h.reject ? "yes" : "no");
      }
    } else if (*pca) {
      pc::DataMatrix m = pc::load_matrix(pca_in);
      if (pca_normalize) m = pc::minmax_normalize(m);
      const pc::DataMatrix projected = pc::pca_transform(pc::pca_fit(m, pca_n), m);
      if (pca_out.empty()) {
        std::cout << pc::format_matrix(projected);
      } else {
        pc::save_matrix(projected, pca_out);
      }
    } else if (*norm) {
      const pc::DataMatrix m = pc::minmax_normalize(pc::load_matrix(norm_in));
      if (norm_out.empty()) {
        std::cout << pc::format_matrix(m);
      } else {
        pc::save_matrix(m, norm_out);
      }
    }
  } catch (const pc::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pc::Unsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}
