#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "privclust/datagen.hpp"

namespace privclust {

enum class PresetKind { Synthetic, DigitStandin };

struct Preset {
  std::string name;
  std::string description;
  PresetKind kind = PresetKind::Synthetic;
  SyntheticConfig synthetic;
  DigitStandinConfig digit;

  std::uint64_t seed() const;
};

// Directories searched for <name>.json: $PRIVCLUST_PRESET_DIR when set,
// otherwise the source-tree and installed preset directories.
std::vector<std::filesystem::path> preset_search_path();

std::vector<std::string> list_presets();

// Throws InvalidArgument listing the known presets when name is not found.
Preset load_preset(std::string_view name);

Preset parse_preset(std::string_view text);
std::string format_preset(const Preset& preset);

// seed overrides the preset's stored seed.
PairedDataset generate_preset(const Preset& preset, std::optional<std::uint64_t> seed = {});

}  // namespace privclust
