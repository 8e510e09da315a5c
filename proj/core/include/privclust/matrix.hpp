#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace privclust {

using Point = std::vector<double>;

// Dense row-major matrix of feature vectors, one instance per row.
//
// The shape is fixed at construction. Constructors reject NaN/Inf; element
// writes through operator() are trusted (library internals only produce
// finite values).
class DataMatrix {
 public:
  DataMatrix() = default;
  DataMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  static DataMatrix from_rows(const std::vector<Point>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  double operator()(std::size_t r, std::size_t c) const noexcept {
    return values_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) noexcept {
    return values_[r * cols_ + c];
  }

  std::span<const double> row(std::size_t r) const noexcept {
    return {values_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) noexcept {
    return {values_.data() + r * cols_, cols_};
  }

  Point row_point(std::size_t r) const;
  std::vector<double> column(std::size_t c) const;
  std::span<const double> values() const noexcept { return values_; }

  // Rows selected by index, in the given order.
  DataMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const DataMatrix&, const DataMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// Column means (length cols()). Requires rows() >= 1.
Point column_means(const DataMatrix& m);

// [a | b]: row i is row i of a followed by row i of b.
DataMatrix concat_features(const DataMatrix& a, const DataMatrix& b);

}  // namespace privclust
