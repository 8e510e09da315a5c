#include "privclust/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "privclust/errors.hpp"
#include "privclust/geometry.hpp"
#include "privclust/random.hpp"

namespace privclust {

double SyntheticConfig::separation() const {
  if (privileged_centers.size() != 2) {
    throw InvalidArgument("separation: needs exactly two privileged centers");
  }
  return euclidean_distance(privileged_centers[0], privileged_centers[1]);
}

TechnicalData gen_technical(const SyntheticConfig& config) {
  const std::size_t blobs = config.blob_centers.size();
  if (blobs < 2) throw InvalidArgument("gen_technical: needs at least 2 blobs");
  if (config.blob_class.size() != blobs) {
    throw InvalidArgument("gen_technical: one class id per blob is required");
  }
  if (config.blob_count < 1) throw InvalidArgument("gen_technical: blob_count must be >= 1");
  if (!(config.technical_sigma >= 0.0)) {
    throw InvalidArgument("gen_technical: technical_sigma must be >= 0");
  }
  bool seen[2] = {false, false};
  for (const std::size_t c : config.blob_class) {
    if (c > 1) throw InvalidArgument("gen_technical: class ids must be 0 or 1");
    seen[c] = true;
  }
  if (!seen[0] || !seen[1]) throw InvalidArgument("gen_technical: both classes need a blob");
  const std::size_t d = config.blob_centers.front().size();
  for (const Point& c : config.blob_centers) {
    if (c.size() != d || d == 0) throw InvalidArgument("gen_technical: inconsistent blob centers");
  }

  Rng rng(derive_seed(config.seed, "technical"));
  TechnicalData out;
  out.x = DataMatrix(blobs * config.blob_count, d);
  out.truth.reserve(blobs * config.blob_count);
  std::size_t row = 0;
  for (std::size_t b = 0; b < blobs; ++b) {
    for (std::size_t i = 0; i < config.blob_count; ++i, ++row) {
      for (std::size_t c = 0; c < d; ++c) {
        out.x(row, c) = config.blob_centers[b][c] + config.technical_sigma * rng.normal();
      }
      out.truth.push_back(config.blob_class[b]);
    }
  }
  return out;
}

DataMatrix gen_pointwise_privileged(std::span<const std::size_t> truth,
                                    const std::vector<Point>& centers) {
  if (centers.empty()) throw InvalidArgument("gen_pointwise_privileged: no centers");
  const std::size_t d = centers.front().size();
  DataMatrix out(truth.size(), d);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] >= centers.size()) {
      throw InvalidArgument("gen_pointwise_privileged: class " + std::to_string(truth[i]) +
                            " has no privileged center");
    }
    const Point& c = centers[truth[i]];
    if (c.size() != d) throw InvalidArgument("gen_pointwise_privileged: inconsistent centers");
    std::copy(c.begin(), c.end(), out.row(i).begin());
  }
  return out;
}

DataMatrix gen_gaussian_privileged(std::span<const std::size_t> truth,
                                   const std::vector<Point>& centers, double sigma,
                                   std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw InvalidArgument("gen_gaussian_privileged: sigma must be >= 0");
  DataMatrix out = gen_pointwise_privileged(truth, centers);
  if (sigma == 0.0) return out;
  Rng rng(seed);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (double& v : out.row(i)) v += sigma * rng.normal();
  }
  return out;
}

PairedDataset gen_synthetic(const SyntheticConfig& config) {
  TechnicalData tech = gen_technical(config);
  PairedDataset out;
  out.xp = gen_gaussian_privileged(tech.truth, config.privileged_centers, config.privileged_sigma,
                                   derive_seed(config.seed, "privileged"));
  out.x = std::move(tech.x);
  out.truth = std::move(tech.truth);
  return out;
}

namespace {

// Seven-segment style strokes on a side x side canvas: 0 top, 1 upper-left,
// 2 upper-right, 3 middle, 4 lower-left, 5 lower-right, 6 bottom.
std::vector<double> draw_segments(std::size_t side, const bool (&segments)[7], double dx,
                                  double dy) {
  std::vector<double> img(side * side, 0.0);
  const double s = static_cast<double>(side);
  const double left = 0.25 * s + dx;
  const double right = 0.70 * s + dx;
  const double top = 0.15 * s + dy;
  const double middle = 0.47 * s + dy;
  const double bottom = 0.80 * s + dy;
  auto stroke = [&](double x0, double y0, double x1, double y1) {
    for (std::size_t r = 0; r < side; ++r) {
      for (std::size_t c = 0; c < side; ++c) {
        const double px = static_cast<double>(c) + 0.5;
        const double py = static_cast<double>(r) + 0.5;
        // Distance from the pixel center to the segment.
        const double vx = x1 - x0;
        const double vy = y1 - y0;
        const double len2 = vx * vx + vy * vy;
        double t = len2 > 0.0 ? ((px - x0) * vx + (py - y0) * vy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double ex = px - (x0 + t * vx);
        const double ey = py - (y0 + t * vy);
        const double ink = std::exp(-(ex * ex + ey * ey) / 0.5);
        img[r * side + c] = std::max(img[r * side + c], ink);
      }
    }
  };
  if (segments[0]) stroke(left, top, right, top);
  if (segments[1]) stroke(left, top, left, middle);
  if (segments[2]) stroke(right, top, right, middle);
  if (segments[3]) stroke(left, middle, right, middle);
  if (segments[4]) stroke(left, middle, left, bottom);
  if (segments[5]) stroke(right, middle, right, bottom);
  if (segments[6]) stroke(left, bottom, right, bottom);
  return img;
}

}  // namespace

PairedDataset gen_digit_standin(const DigitStandinConfig& config) {
  if (config.per_class < 1 || config.side < 3 || config.privileged_dims < 1) {
    throw InvalidArgument("gen_digit_standin: invalid configuration");
  }
  constexpr bool kFive[7] = {true, true, false, true, false, true, true};
  constexpr bool kEight[7] = {true, true, true, true, true, true, true};

  Rng rng(derive_seed(config.seed, "digit-pixels"));
  Rng keywords(derive_seed(config.seed, "digit-keywords"));
  const std::size_t n = 2 * config.per_class;
  const std::size_t pixels = config.side * config.side;
  const std::size_t pd = config.privileged_dims;
  // A third of the keywords are binary, the rest are 0..5 scales; the first
  // third are class-dependent.
  const std::size_t informative = std::max<std::size_t>(1, pd / 3);

  PairedDataset out;
  out.x = DataMatrix(n, pixels);
  out.xp = DataMatrix(n, pd);
  Labels truth(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t cls = i < config.per_class ? 0 : 1;
    truth[i] = cls;
    const double dx = 1.2 * (rng.uniform() - 0.5) * 2.0;
    const double dy = 1.2 * (rng.uniform() - 0.5) * 2.0;
    const double intensity = 160.0 + 95.0 * rng.uniform();
    const auto img = draw_segments(config.side, cls == 0 ? kFive : kEight, dx, dy);
    for (std::size_t p = 0; p < pixels; ++p) {
      const double v = intensity * img[p] + config.pixel_noise * rng.normal();
      out.x(i, p) = std::clamp(std::round(v), 0.0, 255.0);
    }
    const double sign = cls == 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < pd; ++j) {
      const double shift = j < informative ? sign * config.privileged_signal : 0.0;
      const double latent = shift + keywords.normal();
      if (j % 3 == 0) {
        out.xp(i, j) = latent > 0.0 ? 1.0 : 0.0;
      } else {
        out.xp(i, j) = std::clamp(std::round(2.5 + 1.2 * latent), 0.0, 5.0);
      }
    }
  }
  out.truth = std::move(truth);
  return out;
}

}  // namespace privclust
