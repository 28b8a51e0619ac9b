#include "ff/engine/kernels.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ff/core/numeric.h"

namespace ff::engine {

namespace {

// Window aggregation with strict warm-up and missing poisoning. Aggregate is
// called with a pointer to the first element of a fully present window.
template <typename Aggregate>
std::vector<double> RollingStrict(const std::vector<double>& series, int window,
                                  Aggregate&& aggregate) {
  const std::size_t n = series.size();
  std::vector<double> out(n, kMissing);
  if (window < 1 || static_cast<std::size_t>(window) > n) {
    return out;
  }
  const std::size_t w = static_cast<std::size_t>(window);
  for (std::size_t t = w - 1; t < n; ++t) {
    bool complete = true;
    for (std::size_t i = t + 1 - w; i <= t; ++i) {
      if (IsMissing(series[i])) {
        complete = false;
        break;
      }
    }
    if (complete) {
      out[t] = MakeFinite(aggregate(&series[t + 1 - w], w));
    }
  }
  return out;
}

double WindowMean(const double* begin, std::size_t count) {
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sum += begin[i];
  }
  return sum / static_cast<double>(count);
}

double WindowSampleVar(const double* begin, std::size_t count) {
  const double mean = WindowMean(begin, count);
  double accum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double centered = begin[i] - mean;
    accum += centered * centered;
  }
  return accum / static_cast<double>(count - 1);
}

}  // namespace

std::vector<double> TsSma(const std::vector<double>& series, int window) {
  return RollingStrict(series, window, WindowMean);
}

std::vector<double> TsStd(const std::vector<double>& series, int window) {
  if (window < 2) {
    return std::vector<double>(series.size(), kMissing);
  }
  return RollingStrict(series, window, [](const double* begin, std::size_t count) {
    return std::sqrt(WindowSampleVar(begin, count));
  });
}

std::vector<double> TsVar(const std::vector<double>& series, int window) {
  if (window < 2) {
    return std::vector<double>(series.size(), kMissing);
  }
  return RollingStrict(series, window, WindowSampleVar);
}

std::vector<double> TsLogret(const std::vector<double>& series, int lag) {
  const std::size_t n = series.size();
  std::vector<double> out(n, kMissing);
  if (lag < 1) {
    return out;
  }
  const std::size_t l = static_cast<std::size_t>(lag);
  for (std::size_t t = l; t < n; ++t) {
    const double now = series[t];
    const double past = series[t - l];
    if (IsPresent(now) && IsPresent(past) && now > 0.0 && past > 0.0) {
      out[t] = MakeFinite(std::log(now / past));
    }
  }
  return out;
}

std::vector<double> CsRank(const std::vector<double>& row) {
  const std::size_t n = row.size();
  std::vector<double> out(n, kMissing);
  std::vector<std::size_t> present;
  present.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (IsPresent(row[i])) {
      present.push_back(i);
    }
  }
  if (present.empty()) {
    return out;
  }
  if (present.size() == 1) {
    out[present[0]] = 0.5;
    return out;
  }
  std::sort(present.begin(), present.end(), [&row](std::size_t a, std::size_t b) {
    if (row[a] != row[b]) {
      return row[a] < row[b];
    }
    return a < b;
  });
  const double denom = static_cast<double>(present.size() - 1);
  std::size_t i = 0;
  while (i < present.size()) {
    std::size_t j = i + 1;
    while (j < present.size() && row[present[j]] == row[present[i]]) {
      ++j;
    }
    // Ties share the average of their 1-based rank positions.
    const double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (std::size_t k = i; k < j; ++k) {
      out[present[k]] = (avg_rank - 1.0) / denom;
    }
    i = j;
  }
  return out;
}

std::vector<double> CsZscore(const std::vector<double>& row) {
  const std::size_t n = row.size();
  std::vector<double> out(n, kMissing);
  std::vector<double> values;
  values.reserve(n);
  for (double v : row) {
    if (IsPresent(v)) {
      values.push_back(v);
    }
  }
  if (values.empty()) {
    return out;
  }
  double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) {
    var += (v - mean) * (v - mean);
  }
  const bool degenerate = values.size() < 2 || var <= 0.0;
  const double stddev =
      degenerate ? 0.0 : std::sqrt(var / static_cast<double>(values.size() - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (!IsPresent(row[i])) {
      continue;
    }
    out[i] = degenerate ? 0.0 : MakeFinite((row[i] - mean) / stddev);
  }
  return out;
}

Matrix IfSelect(const Matrix& condition, const Matrix& then_values,
                const Matrix& otherwise) {
  Matrix out(condition.rows(), condition.cols());
  for (std::size_t d = 0; d < condition.rows(); ++d) {
    for (std::size_t a = 0; a < condition.cols(); ++a) {
      const double c = condition.at(d, a);
      if (IsMissing(c)) {
        continue;
      }
      const double picked =
          c != 0.0 ? then_values.at(d, a) : otherwise.at(d, a);
      out.set(d, a, MakeFinite(picked));
    }
  }
  return out;
}

}  // namespace ff::engine
