#include "ff/scoring/score_config.h"

#include <fstream>

#include <json.hpp>

#include "ff/metrics/report.h"

namespace ff::scoring {

bool ScoreConfig::Valid(std::string* out_error) const {
  for (const auto& [name, transform] : metrics) {
    bool known = false;
    for (const char* metric : metrics::kMetricNames) {
      if (name == metric) {
        known = true;
        break;
      }
    }
    if (!known) {
      if (out_error != nullptr) {
        *out_error = "unknown metric name in score config: " + name;
      }
      return false;
    }
    if (!(transform.scale > 0.0)) {
      if (out_error != nullptr) {
        *out_error = "metric scale must be positive: " + name;
      }
      return false;
    }
  }
  if (family_cap < 1) {
    if (out_error != nullptr) {
      *out_error = "family cap must be at least 1";
    }
    return false;
  }
  if (!(similarity_threshold > 0.0) || !(similarity_threshold < 1.0)) {
    if (out_error != nullptr) {
      *out_error = "similarity threshold must lie in (0, 1)";
    }
    return false;
  }
  return true;
}

ScoreConfig DefaultScoreConfig() {
  ScoreConfig config;
  config.metrics = {
      {"rank_ic_mean", {0.0, 0.01, 2.0}},
      {"rank_icir_ann", {0.0, 0.5, 1.5}},
      {"ic_mean", {0.0, 0.01, 1.0}},
      {"icir_ann", {0.0, 0.5, 1.0}},
      {"long_short_mean", {0.0, 0.0005, 1.5}},
      {"turnover_top_decile", {0.15, 0.15, -1.0}},
      {"turnover_rank", {0.15, 0.15, -0.5}},
      {"coverage", {0.9, 0.1, 0.5}},
      {"drop_ratio", {0.1, 0.1, -0.5}},
      {"complexity_nodes", {20.0, 20.0, -0.25}},
  };
  config.crowding_scale = 1.0;
  config.similarity_scale = 1.0;
  config.family_scale = 0.3;
  config.novelty_bonus = 0.2;
  config.similarity_threshold = 0.6;
  config.family_cap = 2;
  return config;
}

bool LoadScoreConfigFile(const std::string& path, ScoreConfig* out,
                         std::string* out_error) {
  std::ifstream in(path);
  if (!in.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot open score config: " + path;
    }
    return false;
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    if (out_error != nullptr) {
      *out_error = std::string("malformed score config: ") + e.what();
    }
    return false;
  }

  ScoreConfig config = DefaultScoreConfig();
  if (doc.contains("metrics")) {
    config.metrics.clear();
    for (const auto& [name, entry] : doc["metrics"].items()) {
      MetricTransform transform;
      transform.center = entry.value("center", 0.0);
      transform.scale = entry.value("scale", 1.0);
      transform.weight = entry.value("weight", 0.0);
      config.metrics[name] = transform;
    }
  }
  config.crowding_scale = doc.value("crowding_scale", config.crowding_scale);
  config.similarity_scale = doc.value("similarity_scale", config.similarity_scale);
  config.family_scale = doc.value("family_scale", config.family_scale);
  config.novelty_bonus = doc.value("novelty_bonus", config.novelty_bonus);
  config.similarity_threshold =
      doc.value("similarity_threshold", config.similarity_threshold);
  config.family_cap = doc.value("family_cap", config.family_cap);

  if (!config.Valid(out_error)) {
    return false;
  }
  *out = std::move(config);
  return true;
}

}  // namespace ff::scoring
