#include "privclust/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "privclust/errors.hpp"

namespace privclust {

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {
  if (!std::isfinite(fill)) throw InvalidArgument("DataMatrix: non-finite fill value");
}

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw InvalidArgument("DataMatrix: expected " + std::to_string(rows_ * cols_) +
                          " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidArgument("DataMatrix: non-finite value at row " +
                            std::to_string(i / (cols_ ? cols_ : 1)) + ", column " +
                            std::to_string(cols_ ? i % cols_ : 0));
    }
  }
}

DataMatrix DataMatrix::from_rows(const std::vector<Point>& rows) {
  if (rows.empty()) return {};
  const std::size_t d = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * d);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != d) {
      throw InvalidArgument("DataMatrix::from_rows: row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].size()) + " values, expected " +
                            std::to_string(d));
    }
    values.insert(values.end(), rows[r].begin(), rows[r].end());
  }
  return DataMatrix(rows.size(), d, std::move(values));
}

Point DataMatrix::row_point(std::size_t r) const {
  const auto v = row(r);
  return Point(v.begin(), v.end());
}

std::vector<double> DataMatrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

DataMatrix DataMatrix::select_rows(std::span<const std::size_t> indices) const {
  DataMatrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw InvalidArgument("select_rows: index out of range");
    const auto src = row(indices[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

Point column_means(const DataMatrix& m) {
  if (m.rows() == 0) throw InvalidArgument("column_means: empty matrix");
  Point mean(m.cols(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) mean[c] += m(r, c);
  }
  for (double& v : mean) v /= static_cast<double>(m.rows());
  return mean;
}

DataMatrix concat_features(const DataMatrix& a, const DataMatrix& b) {
  if (a.rows() != b.rows()) {
    throw InvalidArgument("concat_features: row counts differ (" + std::to_string(a.rows()) +
                          " vs " + std::to_string(b.rows()) + ")");
  }
  DataMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row(r);
    const auto ra = a.row(r);
    const auto rb = b.row(r);
    std::copy(ra.begin(), ra.end(), dst.begin());
    std::copy(rb.begin(), rb.end(), dst.begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return out;
}

}  // namespace privclust
