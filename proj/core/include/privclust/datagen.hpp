#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "privclust/labels.hpp"
#include "privclust/matrix.hpp"

namespace privclust {

struct SyntheticConfig {
  std::vector<Point> blob_centers;
  std::size_t blob_count = 50;
  // True class (0 or 1) of each blob.
  std::vector<std::size_t> blob_class;
  double technical_sigma = 0.0;
  // One center per class.
  std::vector<Point> privileged_centers;
  // 0 produces point-wise privileged data.
  double privileged_sigma = 0.0;
  std::uint64_t seed = 0;

  // Distance between the two privileged class centers.
  double separation() const;
};

struct PairedDataset {
  DataMatrix x;
  DataMatrix xp;
  std::optional<Labels> truth;
};

struct TechnicalData {
  DataMatrix x;
  Labels truth;
};

// Isotropic Gaussian samples around each blob center; rows are grouped by
// blob in config order.
TechnicalData gen_technical(const SyntheticConfig& config);

// Row i = centers[truth[i]].
DataMatrix gen_pointwise_privileged(std::span<const std::size_t> truth,
                                    const std::vector<Point>& centers);

// Row i ~ N(centers[truth[i]], sigma^2 I). sigma = 0 gives the point-wise data.
DataMatrix gen_gaussian_privileged(std::span<const std::size_t> truth,
                                   const std::vector<Point>& centers, double sigma,
                                   std::uint64_t seed);

// Technical data plus privileged data; the privileged stream is seeded
// independently of the technical one.
PairedDataset gen_synthetic(const SyntheticConfig& config);

// Two-class stand-in for the 10x10 digit data: side x side pixel vectors in
// [0, 255] and keyword-scale privileged vectors that separate the classes
// only weakly.
struct DigitStandinConfig {
  std::size_t per_class = 50;
  std::size_t side = 10;
  std::size_t privileged_dims = 21;
  double pixel_noise = 60.0;
  double privileged_signal = 0.6;
  std::uint64_t seed = 0;
};

PairedDataset gen_digit_standin(const DigitStandinConfig& config);

}  // namespace privclust
