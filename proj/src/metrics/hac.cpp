#include "ff/metrics/hac.h"

#include <cmath>

namespace ff::metrics {

int AutomaticHacLag(std::size_t length) {
  const double t = static_cast<double>(length);
  return static_cast<int>(std::floor(4.0 * std::pow(t / 100.0, 2.0 / 9.0)));
}

HacTest ComputeHacTest(const std::vector<double>& series,
                       std::optional<int> lag_override) {
  HacTest test;
  const std::size_t n = series.size();
  if (n < kMinHacLength) {
    return test;
  }

  double mean = 0.0;
  for (double v : series) {
    mean += v;
  }
  mean /= static_cast<double>(n);

  bool constant = true;
  for (double v : series) {
    if (v != series[0]) {
      constant = false;
      break;
    }
  }
  if (constant) {
    return test;
  }

  int lag = lag_override.value_or(AutomaticHacLag(n));
  if (lag < 0) {
    lag = 0;
  }
  if (static_cast<std::size_t>(lag) >= n) {
    lag = static_cast<int>(n) - 1;
  }

  // Autocovariances with divisor T; Bartlett weights keep the estimator
  // positive semi-definite.
  auto autocov = [&](int ell) {
    double accum = 0.0;
    for (std::size_t t = static_cast<std::size_t>(ell); t < n; ++t) {
      accum += (series[t] - mean) * (series[t - static_cast<std::size_t>(ell)] - mean);
    }
    return accum / static_cast<double>(n);
  };

  double long_run = autocov(0);
  for (int ell = 1; ell <= lag; ++ell) {
    const double weight = 1.0 - static_cast<double>(ell) / static_cast<double>(lag + 1);
    long_run += 2.0 * weight * autocov(ell);
  }
  const double variance_of_mean = long_run / static_cast<double>(n);
  if (!(variance_of_mean > 0.0)) {
    return test;
  }

  test.valid = true;
  test.lag = lag;
  test.mean = mean;
  test.std_error = std::sqrt(variance_of_mean);
  test.t_stat = mean / test.std_error;
  test.p_value = std::erfc(std::fabs(test.t_stat) / std::sqrt(2.0));
  return test;
}

std::string SignificanceStars(double p_value) {
  if (p_value < 0.001) {
    return "***";
  }
  if (p_value < 0.01) {
    return "**";
  }
  if (p_value < 0.05) {
    return "*";
  }
  return "";
}

}  // namespace ff::metrics
