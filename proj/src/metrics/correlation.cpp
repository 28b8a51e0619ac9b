#include "ff/metrics/correlation.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ff::metrics {

double Pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || n != y.size()) {
    return 0.0;
  }
  const double mean_x =
      std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double mean_y =
      std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double cov = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x <= 0.0 || var_y <= 0.0) {
    return 0.0;
  }
  const double corr = cov / std::sqrt(var_x * var_y);
  return std::clamp(corr, -1.0, 1.0);
}

std::vector<double> AverageTieRanks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<double> ranks(n, 0.0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&values](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) {
      return values[a] < values[b];
    }
    return a < b;
  });
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) {
      ++j;
    }
    const double avg = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (std::size_t k = i; k < j; ++k) {
      ranks[order[k]] = avg;
    }
    i = j;
  }
  return ranks;
}

double Spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    return 0.0;
  }
  return Pearson(AverageTieRanks(x), AverageTieRanks(y));
}

}  // namespace ff::metrics
