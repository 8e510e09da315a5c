#include "privclust/normalize.hpp"

#include <algorithm>

namespace privclust {

DataMatrix minmax_normalize(const DataMatrix& m) {
  DataMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double lo = m.rows() ? m(0, c) : 0.0;
    double hi = lo;
    for (std::size_t r = 1; r < m.rows(); ++r) {
      lo = std::min(lo, m(r, c));
      hi = std::max(hi, m(r, c));
    }
    const double range = hi - lo;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      // Constant columns carry no clustering information.
      out(r, c) = range > 0.0 ? (m(r, c) - lo) / range : 0.0;
    }
  }
  return out;
}

}  // namespace privclust
