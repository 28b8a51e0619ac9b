#pragma once

#include <map>
#include <string>

namespace ff::scoring {

struct MetricTransform {
  double center = 0.0;
  double scale = 1.0;  // strictly positive
  double weight = 0.0;
};

struct ScoreConfig {
  std::map<std::string, MetricTransform> metrics;
  double crowding_scale = 1.0;
  double similarity_scale = 1.0;
  double family_scale = 0.3;
  double novelty_bonus = 0.2;
  double similarity_threshold = 0.6;  // in (0, 1)
  int family_cap = 2;

  bool Valid(std::string* out_error) const;
};

// Shipped defaults: centers/scales chosen so typical daily cross-sectional
// magnitudes land in the responsive region of tanh; predictive and economic
// metrics weigh positive, turnover and data loss negative.
ScoreConfig DefaultScoreConfig();

bool LoadScoreConfigFile(const std::string& path, ScoreConfig* out,
                         std::string* out_error);

}  // namespace ff::scoring
