#include "privclust/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include <nlohmann/json.hpp>

#include "privclust/csv.hpp"
#include "privclust/errors.hpp"

namespace privclust {

using nlohmann::json;

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("no runs");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  Summary s;
  s.min = sorted.front();
  s.max = sorted.back();
  double sum = 0.0;
  for (const double v : values) sum += v;
  s.mean = sum / static_cast<double>(n);
  s.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  if (n > 1) {
    double ss = 0.0;
    for (const double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stdev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return s;
}

void finalize_summaries(ExperimentReport& report) {
  if (report.runs.empty()) throw InvalidArgument("no runs");
  std::vector<double> objective;
  std::vector<double> ari;
  std::vector<double> nmi;
  for (const RunRecord& r : report.runs) {
    objective.push_back(r.objective);
    if (r.ari) ari.push_back(*r.ari);
    if (r.nmi) nmi.push_back(*r.nmi);
  }
  report.objective = summarize(objective);
  report.ari.reset();
  report.nmi.reset();
  if (!ari.empty()) report.ari = summarize(ari);
  if (!nmi.empty()) report.nmi = summarize(nmi);
}

PairwiseComparison compare_scores(const std::string& first, std::span<const double> x,
                                  const std::string& second, std::span<const double> y,
                                  const std::string& metric, double significance) {
  PairwiseComparison out;
  out.first = first;
  out.second = second;
  out.metric = metric;
  for (const Alternative alt : {Alternative::TwoSided, Alternative::Less, Alternative::Greater}) {
    HypothesisTest h;
    h.alternative = alt;
    try {
      const WilcoxonResult r = wilcoxon_signed_rank(x, y, alt);
      out.statistic = r.statistic;
      out.n_effective = r.n_effective;
      out.method = r.method;
      h.p_value = r.p_value;
      h.reject = r.p_value < significance;
    } catch (const DegenerateInput&) {
      out.degenerate = true;
      out.statistic = 0.0;
      out.n_effective = 0;
      h.p_value = 1.0;
      h.reject = false;
    }
    out.hypotheses.push_back(h);
  }
  return out;
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ParseError("malformed report: " + what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

double get_real(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) malformed(std::string("field '") + key + "' is not a number");
  return v.get<double>();
}

std::uint64_t get_unsigned(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) malformed(std::string("field '") + key + "' is not unsigned");
  return v.get<std::uint64_t>();
}

std::string get_string(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

bool get_bool(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_boolean()) malformed(std::string("field '") + key + "' is not a boolean");
  return v.get<bool>();
}

const json& get_array(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) malformed(std::string("field '") + key + "' is not an array");
  return v;
}

json summary_json(const Summary& s) {
  return json{{"min", s.min}, {"max", s.max}, {"mean", s.mean}, {"median", s.median},
              {"stdev", s.stdev}};
}

Summary summary_from(const json& j) {
  Summary s;
  s.min = get_real(j, "min");
  s.max = get_real(j, "max");
  s.mean = get_real(j, "mean");
  s.median = get_real(j, "median");
  s.stdev = get_real(j, "stdev");
  return s;
}

json optional_summary(const std::optional<Summary>& s) {
  return s ? summary_json(*s) : json(nullptr);
}

std::optional<Summary> optional_summary_from(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return summary_from(v);
}

std::string_view method_label(WilcoxonMethod m) {
  return m == WilcoxonMethod::Exact ? "exact" : "normal";
}

json comparison_json(const PairwiseComparison& c) {
  json hyps = json::array();
  for (const HypothesisTest& h : c.hypotheses) {
    hyps.push_back({{"alternative", std::string(alternative_name(h.alternative))},
                    {"p_value", h.p_value},
                    {"reject", h.reject}});
  }
  return json{{"first", c.first},
              {"second", c.second},
              {"metric", c.metric},
              {"degenerate", c.degenerate},
              {"statistic", c.statistic},
              {"n_effective", c.n_effective},
              {"method", std::string(method_label(c.method))},
              {"hypotheses", hyps}};
}

PairwiseComparison comparison_from(const json& j) {
  PairwiseComparison c;
  c.first = get_string(j, "first");
  c.second = get_string(j, "second");
  c.metric = get_string(j, "metric");
  c.degenerate = get_bool(j, "degenerate");
  c.statistic = get_real(j, "statistic");
  c.n_effective = get_unsigned(j, "n_effective");
  const std::string method = get_string(j, "method");
  if (method == "exact") {
    c.method = WilcoxonMethod::Exact;
  } else if (method == "normal") {
    c.method = WilcoxonMethod::Normal;
  } else {
    malformed("unknown test method '" + method + "'");
  }
  for (const json& h : get_array(j, "hypotheses")) {
    HypothesisTest t;
    const std::string alt = get_string(h, "alternative");
    const auto parsed = parse_alternative(alt);
    if (!parsed) malformed("unknown alternative '" + alt + "'");
    t.alternative = *parsed;
    t.p_value = get_real(h, "p_value");
    t.reject = get_bool(h, "reject");
    c.hypotheses.push_back(t);
  }
  return c;
}

json config_json(const ConfigSnapshot& config) {
  // An array of pairs keeps the snapshot order.
  json out = json::array();
  for (const auto& [k, v] : config) out.push_back(json::array({k, v}));
  return out;
}

ConfigSnapshot config_from(const json& j) {
  ConfigSnapshot out;
  for (const json& kv : get_array(j, "config")) {
    if (!kv.is_array() || kv.size() != 2 || !kv[0].is_string() || !kv[1].is_string()) {
      malformed("config entries must be [key, value] string pairs");
    }
    out.emplace_back(kv[0].get<std::string>(), kv[1].get<std::string>());
  }
  return out;
}

json optional_real(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_real_from(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) malformed(std::string("field '") + key + "' is not a number");
  return v.get<double>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace

std::string format_report(const ExperimentReport& report) {
  if (report.runs.empty()) throw InvalidArgument("no runs");
  json runs = json::array();
  for (const RunRecord& r : report.runs) {
    runs.push_back({{"index", r.index},
                    {"seed", r.seed},
                    {"objective", r.objective},
                    {"ari", optional_real(r.ari)},
                    {"nmi", optional_real(r.nmi)}});
  }
  json comparisons = json::array();
  for (const auto& c : report.comparisons) comparisons.push_back(comparison_json(c));
  json j{{"method", report.method},
         {"dataset", report.dataset},
         {"summary",
          {{"objective", summary_json(report.objective)},
           {"ari", optional_summary(report.ari)},
           {"nmi", optional_summary(report.nmi)}}},
         {"runs", runs},
         {"comparisons", comparisons},
         {"config", config_json(report.config)}};
  return j.dump(2) + "\n";
}

ExperimentReport parse_report(std::string_view text) {
  const json j = parse_json(text);
  ExperimentReport r;
  try {
    r.method = get_string(j, "method");
    r.dataset = get_string(j, "dataset");
    const json& summary = field(j, "summary");
    r.objective = summary_from(field(summary, "objective"));
    r.ari = optional_summary_from(summary, "ari");
    r.nmi = optional_summary_from(summary, "nmi");
    for (const json& run : get_array(j, "runs")) {
      RunRecord rec;
      rec.index = get_unsigned(run, "index");
      rec.seed = get_unsigned(run, "seed");
      rec.objective = get_real(run, "objective");
      rec.ari = optional_real_from(run, "ari");
      rec.nmi = optional_real_from(run, "nmi");
      r.runs.push_back(rec);
    }
    for (const json& c : get_array(j, "comparisons")) r.comparisons.push_back(comparison_from(c));
    r.config = config_from(j);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  if (r.runs.empty()) throw ParseError("malformed report: no runs");
  return r;
}

void write_report(const ExperimentReport& report, const std::filesystem::path& path) {
  write_text_file(path, format_report(report));
}

ExperimentReport read_report(const std::filesystem::path& path) {
  return parse_report(read_text_file(path));
}

std::string format_comparison(const ComparisonReport& report) {
  json rows = json::array();
  for (const ComparisonRow& row : report.rows) {
    rows.push_back({{"method", row.method},
                    {"runs", row.runs},
                    {"ari", optional_summary(row.ari)},
                    {"nmi", optional_summary(row.nmi)}});
  }
  json comparisons = json::array();
  for (const auto& c : report.comparisons) comparisons.push_back(comparison_json(c));
  json j{{"dataset", report.dataset},
         {"significance", report.significance},
         {"rows", rows},
         {"comparisons", comparisons},
         {"config", config_json(report.config)}};
  return j.dump(2) + "\n";
}

ComparisonReport parse_comparison(std::string_view text) {
  const json j = parse_json(text);
  ComparisonReport r;
  try {
    r.dataset = get_string(j, "dataset");
    r.significance = get_real(j, "significance");
    for (const json& row : get_array(j, "rows")) {
      ComparisonRow out;
      out.method = get_string(row, "method");
      out.runs = get_unsigned(row, "runs");
      out.ari = optional_summary_from(row, "ari");
      out.nmi = optional_summary_from(row, "nmi");
      r.rows.push_back(out);
    }
    for (const json& c : get_array(j, "comparisons")) r.comparisons.push_back(comparison_from(c));
    r.config = config_from(j);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  return r;
}

void write_comparison(const ComparisonReport& report, const std::filesystem::path& path) {
  write_text_file(path, format_comparison(report));
}

ComparisonReport read_comparison(const std::filesystem::path& path) {
  return parse_comparison(read_text_file(path));
}

std::string format_comparison_table(const ComparisonReport& report, bool use_nmi) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %8s %8s %8s %8s %8s\n", "Method", "Min", "Max", "Mean",
                "Median", "St.Dev.");
  out += line;
  for (const ComparisonRow& row : report.rows) {
    const auto& s = use_nmi ? row.nmi : row.ari;
    if (!s) {
      std::snprintf(line, sizeof line, "%-16s %8s %8s %8s %8s %8s\n", row.method.c_str(), "-",
                    "-", "-", "-", "-");
    } else {
      std::snprintf(line, sizeof line, "%-16s %8.4f %8.4f %8.4f %8.4f %8.4f\n",
                    row.method.c_str(), s->min, s->max, s->mean, s->median, s->stdev);
    }
    out += line;
  }
  return out;
}

}  // namespace privclust
