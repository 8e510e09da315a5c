#pragma once

#include <span>

#include "privclust/matrix.hpp"

namespace privclust {

double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);
double euclidean_distance(std::span<const double> a, std::span<const double> b);

// Orthogonal projection of x onto the infinite line through c_from and c_to:
//   Z = c_from + [(x - c_from).(c_to - c_from) / |c_to - c_from|^2] (c_to - c_from)
// Throws DegenerateInput when c_from == c_to.
Point project_onto_line(std::span<const double> x,
                        std::span<const double> c_from,
                        std::span<const double> c_to);

}  // namespace privclust
