#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ff::metrics {

// Significance test of a series mean with a Bartlett-kernel
// heteroskedasticity-and-autocorrelation-consistent variance estimator.
struct HacTest {
  bool valid = false;
  double mean = 0.0;
  double std_error = 0.0;
  double t_stat = 0.0;
  double p_value = 1.0;  // two-sided, normal reference
  int lag = 0;
};

inline constexpr int kMinHacLength = 8;

// Bandwidth rule floor(4 * (T/100)^(2/9)).
int AutomaticHacLag(std::size_t length);

// Left invalid when the series is shorter than kMinHacLength or constant.
// lag_override forces a bandwidth (0 reproduces the classical t-statistic).
HacTest ComputeHacTest(const std::vector<double>& series,
                       std::optional<int> lag_override = std::nullopt);

// "***" p < 0.001, "**" p < 0.01, "*" p < 0.05, else "".
std::string SignificanceStars(double p_value);

}  // namespace ff::metrics
