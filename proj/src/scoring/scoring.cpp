#include "ff/scoring/scoring.h"

#include <algorithm>
#include <cmath>

#include "ff/core/matrix.h"

namespace ff::scoring {

double Standardize(double value, double center, double scale) {
  return std::tanh((value - center) / scale);
}

double BaseScore(const std::map<std::string, double>& metrics,
                 const ScoreConfig& config) {
  double score = 0.0;
  for (const auto& [name, transform] : config.metrics) {
    auto it = metrics.find(name);
    if (it == metrics.end() || IsMissing(it->second)) {
      continue;  // missing metrics contribute 0
    }
    score += transform.weight *
             Standardize(it->second, transform.center, transform.scale);
  }
  return score;
}

double ProximityPenalty(double max_similarity, double threshold, double scale) {
  const double excess = std::max(0.0, max_similarity - threshold);
  return scale * excess / (1.0 - threshold);
}

double CrowdingPenalty(const dsl::FormulaAst& candidate,
                       const std::vector<dsl::FormulaAst>& negative_templates,
                       const ScoreConfig& config) {
  if (negative_templates.empty()) {
    return 0.0;
  }
  double max_similarity = 0.0;
  for (const dsl::FormulaAst& reference : negative_templates) {
    max_similarity =
        std::max(max_similarity, dsl::FormulaSimilarity(candidate, reference));
  }
  return ProximityPenalty(max_similarity, config.similarity_threshold,
                          config.crowding_scale);
}

}  // namespace ff::scoring
