#pragma once

#include <map>
#include <string>
#include <vector>

#include "ff/dsl/analysis.h"
#include "ff/dsl/ast.h"
#include "ff/scoring/score_config.h"

namespace ff::scoring {

// tanh((m - c) / s): strictly monotone in m, bounded in (-1, 1).
double Standardize(double value, double center, double scale);

// Weighted sum of standardized metrics; missing metrics contribute 0.
double BaseScore(const std::map<std::string, double>& metrics,
                 const ScoreConfig& config);

// scale * max(0, max_similarity - threshold) / (1 - threshold); zero when
// the reference set is empty.
double ProximityPenalty(double max_similarity, double threshold, double scale);

double CrowdingPenalty(const dsl::FormulaAst& candidate,
                       const std::vector<dsl::FormulaAst>& negative_templates,
                       const ScoreConfig& config);

struct ScoreBreakdown {
  double base = 0.0;
  double crowding_penalty = 0.0;
  double similarity_penalty = 0.0;
  double family_penalty = 0.0;
  double novelty_bonus = 0.0;

  double Adjusted() const {
    return base - crowding_penalty - similarity_penalty - family_penalty +
           novelty_bonus;
  }
};

struct ScoredCandidate {
  std::string formula;
  std::string canonical_key;
  dsl::Family family = dsl::Family::kOther;
  std::map<std::string, double> metrics;
  ScoreBreakdown score;
  bool selected = false;
};

}  // namespace ff::scoring
