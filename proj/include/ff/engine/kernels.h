#pragma once

#include <vector>

#include "ff/core/matrix.h"

namespace ff::engine {

// Time-series kernels walk one asset column; strict warm-up means the output
// is missing until the raw window is fully populated, and any missing value
// inside the window poisons that output cell. Cross-sectional kernels walk
// one date row. All kernels are pure and lookahead-free.

// Rolling mean over the trailing `window` values.
std::vector<double> TsSma(const std::vector<double>& series, int window);

// Rolling sample standard deviation (divisor window - 1); window < 2 yields
// all missing.
std::vector<double> TsStd(const std::vector<double>& series, int window);

// Square of TsStd.
std::vector<double> TsVar(const std::vector<double>& series, int window);

// ln(x_t / x_{t-lag}) where both are present and positive.
std::vector<double> TsLogret(const std::vector<double>& series, int lag);

// Average-tie ranks mapped to [0, 1] via (rank - 1) / (n - 1); a single
// present value maps to 0.5; missing cells stay missing.
std::vector<double> CsRank(const std::vector<double>& row);

// (x - mean) / sample std over present values; degenerate rows (fewer than 2
// present values or zero dispersion) map present cells to 0.
std::vector<double> CsZscore(const std::vector<double>& row);

// Elementwise select: nonzero condition takes `then`, zero takes `otherwise`,
// missing condition poisons the output.
Matrix IfSelect(const Matrix& condition, const Matrix& then_values,
                const Matrix& otherwise);

// Applies a time-series kernel column-by-column / a cross-sectional kernel
// row-by-row, coercing non-finite outputs to missing.
template <typename Kernel>
Matrix ApplyPerAsset(const Matrix& input, Kernel&& kernel) {
  Matrix out(input.rows(), input.cols());
  std::vector<double> column(input.rows());
  for (std::size_t a = 0; a < input.cols(); ++a) {
    for (std::size_t d = 0; d < input.rows(); ++d) {
      column[d] = input.at(d, a);
    }
    const std::vector<double> result = kernel(column);
    for (std::size_t d = 0; d < input.rows(); ++d) {
      out.set(d, a, result[d]);
    }
  }
  return out;
}

template <typename Kernel>
Matrix ApplyPerDate(const Matrix& input, Kernel&& kernel) {
  Matrix out(input.rows(), input.cols());
  std::vector<double> row(input.cols());
  for (std::size_t d = 0; d < input.rows(); ++d) {
    for (std::size_t a = 0; a < input.cols(); ++a) {
      row[a] = input.at(d, a);
    }
    const std::vector<double> result = kernel(row);
    for (std::size_t a = 0; a < input.cols(); ++a) {
      out.set(d, a, result[a]);
    }
  }
  return out;
}

}  // namespace ff::engine
