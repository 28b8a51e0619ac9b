#pragma once

#include <vector>

#include "ff/scoring/scoring.h"

namespace ff::scoring {

// A candidate entering selection: base score and crowding penalty are fixed
// at evaluation time; similarity/family terms depend on selection state.
struct SelectionInput {
  ScoredCandidate candidate;
  dsl::FormulaAst ast;
};

// Greedy family-capped top-k. Each step rescoring every remaining eligible
// candidate against the current selected set, picking the maximum adjusted
// score (ties broken by canonical key). Candidates whose family already
// holds `family_cap` winners become ineligible. Duplicated canonical keys
// are collapsed to their first occurrence before the loop. May return fewer
// than k. The returned candidates carry the breakdown frozen at the step
// they were picked.
std::vector<ScoredCandidate> SelectTopK(const std::vector<SelectionInput>& pool,
                                        int k, const ScoreConfig& config);

}  // namespace ff::scoring
