#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace ff {

// Missing cells are quiet NaN; zero is a meaningful value and never stands
// in for "absent".
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool IsMissing(double x) { return std::isnan(x); }
inline bool IsPresent(double x) { return !std::isnan(x); }

// Dense row-major date x asset matrix. Rows index dates, columns assets.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = kMissing)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return cells_.empty(); }

  double at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, double v) { cells_[r * cols_ + c] = v; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  const std::vector<double>& cells() const { return cells_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
};

}  // namespace ff
