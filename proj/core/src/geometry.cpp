#include "privclust/geometry.hpp"

#include <cmath>
#include <string>

#include "privclust/errors.hpp"

namespace privclust {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* who) {
  if (a != b) {
    throw InvalidArgument(std::string(who) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a.size(), b.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a.size(), b.size(), "squared_distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

Point project_onto_line(std::span<const double> x, std::span<const double> c_from,
                        std::span<const double> c_to) {
  require_same_dim(x.size(), c_from.size(), "project_onto_line");
  require_same_dim(c_from.size(), c_to.size(), "project_onto_line");
  const std::size_t d = x.size();
  Point direction(d);
  double length2 = 0.0;
  double along = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    direction[i] = c_to[i] - c_from[i];
    length2 += direction[i] * direction[i];
    along += (x[i] - c_from[i]) * direction[i];
  }
  if (length2 == 0.0) {
    throw DegenerateInput("project_onto_line: the two line points coincide");
  }
  const double t = along / length2;
  Point z(d);
  for (std::size_t i = 0; i < d; ++i) z[i] = c_from[i] + t * direction[i];
  return z;
}

}  // namespace privclust
