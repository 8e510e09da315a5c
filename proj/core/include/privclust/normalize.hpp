#pragma once

#include "privclust/matrix.hpp"

namespace privclust {

// Per-column (v - min) / (max - min). Constant columns map to 0.
DataMatrix minmax_normalize(const DataMatrix& m);

}  // namespace privclust
