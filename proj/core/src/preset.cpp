#include "privclust/preset.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <system_error>

#include <nlohmann/json.hpp>

#include "privclust/csv.hpp"
#include "privclust/errors.hpp"

namespace privclust {

using nlohmann::json;

std::uint64_t Preset::seed() const {
  return kind == PresetKind::Synthetic ? synthetic.seed : digit.seed;
}

std::vector<std::filesystem::path> preset_search_path() {
  if (const char* env = std::getenv("PRIVCLUST_PRESET_DIR"); env != nullptr && *env != '\0') {
    return {std::filesystem::path(env)};
  }
  return {std::filesystem::path(PRIVCLUST_DEFAULT_PRESET_DIR),
          std::filesystem::path(PRIVCLUST_INSTALL_PRESET_DIR)};
}

std::vector<std::string> list_presets() {
  std::set<std::string> names;
  for (const auto& dir : preset_search_path()) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) continue;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
      if (entry.path().extension() == ".json") names.insert(entry.path().stem().string());
    }
  }
  return {names.begin(), names.end()};
}

Preset load_preset(std::string_view name) {
  for (const auto& dir : preset_search_path()) {
    const auto path = dir / (std::string(name) + ".json");
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec)) {
      Preset p = parse_preset(read_text_file(path));
      if (p.name.empty()) p.name = std::string(name);
      return p;
    }
  }
  std::string known;
  for (const auto& n : list_presets()) known += (known.empty() ? "" : ", ") + n;
  throw InvalidArgument("unknown preset '" + std::string(name) + "'; known presets: " +
                        (known.empty() ? "(none found)" : known));
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("malformed preset: " + what); }

std::vector<Point> points_from(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) bad(std::string("'") + key + "' must be a list");
  std::vector<Point> out;
  for (const json& p : j.at(key)) out.push_back(p.get<Point>());
  return out;
}

template <typename T>
T value_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

}  // namespace

Preset parse_preset(std::string_view text) {
  Preset p;
  try {
    const json j = json::parse(text.begin(), text.end());
    if (!j.is_object()) bad("top level must be an object");
    p.name = value_or<std::string>(j, "name", "");
    p.description = value_or<std::string>(j, "description", "");
    const std::string kind = value_or<std::string>(j, "kind", "synthetic");
    if (kind == "synthetic") {
      p.kind = PresetKind::Synthetic;
      SyntheticConfig& s = p.synthetic;
      s.blob_centers = points_from(j, "blob_centers");
      s.blob_count = value_or<std::size_t>(j, "blob_count", s.blob_count);
      if (!j.contains("blob_class")) bad("'blob_class' is required");
      s.blob_class = j.at("blob_class").get<std::vector<std::size_t>>();
      s.technical_sigma = value_or<double>(j, "technical_sigma", 0.0);
      s.privileged_centers = points_from(j, "privileged_centers");
      s.privileged_sigma = value_or<double>(j, "privileged_sigma", 0.0);
      s.seed = value_or<std::uint64_t>(j, "seed", 0);
    } else if (kind == "digit-standin") {
      p.kind = PresetKind::DigitStandin;
      DigitStandinConfig& d = p.digit;
      d.per_class = value_or<std::size_t>(j, "per_class", d.per_class);
      d.side = value_or<std::size_t>(j, "side", d.side);
      d.privileged_dims = value_or<std::size_t>(j, "privileged_dims", d.privileged_dims);
      d.pixel_noise = value_or<double>(j, "pixel_noise", d.pixel_noise);
      d.privileged_signal = value_or<double>(j, "privileged_signal", d.privileged_signal);
      d.seed = value_or<std::uint64_t>(j, "seed", 0);
    } else {
      bad("unknown kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    bad(e.what());
  }
  return p;
}

std::string format_preset(const Preset& preset) {
  json j;
  j["name"] = preset.name;
  j["description"] = preset.description;
  if (preset.kind == PresetKind::Synthetic) {
    const SyntheticConfig& s = preset.synthetic;
    j["kind"] = "synthetic";
    j["blob_centers"] = s.blob_centers;
    j["blob_count"] = s.blob_count;
    j["blob_class"] = s.blob_class;
    j["technical_sigma"] = s.technical_sigma;
    j["privileged_centers"] = s.privileged_centers;
    j["privileged_sigma"] = s.privileged_sigma;
    j["seed"] = s.seed;
  } else {
    const DigitStandinConfig& d = preset.digit;
    j["kind"] = "digit-standin";
    j["per_class"] = d.per_class;
    j["side"] = d.side;
    j["privileged_dims"] = d.privileged_dims;
    j["pixel_noise"] = d.pixel_noise;
    j["privileged_signal"] = d.privileged_signal;
    j["seed"] = d.seed;
  }
  return j.dump(2) + "\n";
}

PairedDataset generate_preset(const Preset& preset, std::optional<std::uint64_t> seed) {
  if (preset.kind == PresetKind::Synthetic) {
    SyntheticConfig cfg = preset.synthetic;
    if (seed) cfg.seed = *seed;
    return gen_synthetic(cfg);
  }
  DigitStandinConfig cfg = preset.digit;
  if (seed) cfg.seed = *seed;
  return gen_digit_standin(cfg);
}

}  // namespace privclust
