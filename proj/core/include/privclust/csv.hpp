#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "privclust/datagen.hpp"
#include "privclust/labels.hpp"
#include "privclust/matrix.hpp"

namespace privclust {

enum class HeaderMode {
  Auto,     // first row is a header iff any of its cells is not a number
  Present,
  Absent,
};

struct CsvOptions {
  HeaderMode header = HeaderMode::Auto;
};

// Comma-separated reals, one instance per row. Errors name the row and column
// (1-based, counting the header line).
DataMatrix parse_matrix(std::string_view text, const CsvOptions& options = {},
                        std::string_view source = "<memory>");
DataMatrix load_matrix(const std::filesystem::path& path, const CsvOptions& options = {});

// Shortest round-trip decimal representation of every value.
std::string format_matrix(const DataMatrix& m);
void save_matrix(const DataMatrix& m, const std::filesystem::path& path);

// One 0-based integer label per line.
Labels parse_labels(std::string_view text, std::string_view source = "<memory>");
Labels load_labels(const std::filesystem::path& path);
void save_labels(std::span<const std::size_t> labels, const std::filesystem::path& path);

PairedDataset load_paired(const std::filesystem::path& x, const std::filesystem::path& xp,
                          const std::optional<std::filesystem::path>& truth,
                          const CsvOptions& options = {});

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace privclust
