#include "privclust/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "privclust/errors.hpp"

namespace privclust {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  // Trailing blank lines are not rows.
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  while (true) {
    const auto comma = line.find(',');
    cells.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return cells;
}

std::optional<double> parse_real(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string location(std::string_view source, std::size_t line, std::size_t col) {
  std::string out(source);
  out += ": row " + std::to_string(line);
  if (col > 0) out += ", column " + std::to_string(col);
  return out;
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw IoError("format_real: conversion failed");
  return std::string(buf, ptr);
}

}  // namespace

DataMatrix parse_matrix(std::string_view text, const CsvOptions& options,
                        std::string_view source) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(std::string(source) + ": empty file");

  std::size_t first = 0;
  bool header = options.header == HeaderMode::Present;
  if (options.header == HeaderMode::Auto) {
    for (const auto cell : split_cells(lines[0])) {
      if (!parse_real(cell)) {
        header = true;
        break;
      }
    }
  }
  if (header) first = 1;
  if (first >= lines.size()) throw ParseError(std::string(source) + ": no data rows");

  std::size_t cols = 0;
  std::vector<double> values;
  for (std::size_t li = first; li < lines.size(); ++li) {
    const auto cells = split_cells(lines[li]);
    if (li == first) {
      cols = cells.size();
    } else if (cells.size() != cols) {
      throw ParseError(location(source, li + 1, 0) + ": expected " + std::to_string(cols) +
                       " columns, found " + std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto v = parse_real(cells[c]);
      if (!v) {
        throw ParseError(location(source, li + 1, c + 1) + ": not a finite number: '" +
                         std::string(cells[c]) + "'");
      }
      values.push_back(*v);
    }
  }
  const std::size_t rows = lines.size() - first;
  return DataMatrix(rows, cols, std::move(values));
}

DataMatrix load_matrix(const std::filesystem::path& path, const CsvOptions& options) {
  return parse_matrix(read_text_file(path), options, path.string());
}

std::string format_matrix(const DataMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      out += format_real(m(r, c));
    }
    out += '\n';
  }
  return out;
}

void save_matrix(const DataMatrix& m, const std::filesystem::path& path) {
  write_text_file(path, format_matrix(m));
}

Labels parse_labels(std::string_view text, std::string_view source) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(std::string(source) + ": empty file");
  Labels labels;
  labels.reserve(lines.size());
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto cell = trim(lines[li]);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
      // A single non-numeric first line is a header.
      if (li == 0 && !cell.empty() && !parse_real(cell)) continue;
      throw ParseError(location(source, li + 1, 1) + ": not a non-negative integer label: '" +
                       std::string(cell) + "'");
    }
    labels.push_back(value);
  }
  if (labels.empty()) throw ParseError(std::string(source) + ": no labels");
  return labels;
}

Labels load_labels(const std::filesystem::path& path) {
  return parse_labels(read_text_file(path), path.string());
}

void save_labels(std::span<const std::size_t> labels, const std::filesystem::path& path) {
  std::string out;
  for (const std::size_t l : labels) {
    out += std::to_string(l);
    out += '\n';
  }
  write_text_file(path, out);
}

PairedDataset load_paired(const std::filesystem::path& x, const std::filesystem::path& xp,
                          const std::optional<std::filesystem::path>& truth,
                          const CsvOptions& options) {
  PairedDataset out;
  out.x = load_matrix(x, options);
  out.xp = load_matrix(xp, options);
  if (out.x.rows() != out.xp.rows()) {
    throw InvalidArgument("load_paired: X has " + std::to_string(out.x.rows()) +
                          " rows but X* has " + std::to_string(out.xp.rows()));
  }
  if (truth) {
    Labels labels = load_labels(*truth);
    if (labels.size() != out.x.rows()) {
      throw InvalidArgument("load_paired: truth has " + std::to_string(labels.size()) +
                            " labels for " + std::to_string(out.x.rows()) + " rows");
    }
    out.truth = std::move(labels);
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace privclust
