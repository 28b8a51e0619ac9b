#include "ff/scoring/selection.h"

#include <algorithm>
#include <map>
#include <set>

namespace ff::scoring {

std::vector<ScoredCandidate> SelectTopK(const std::vector<SelectionInput>& pool,
                                        int k, const ScoreConfig& config) {
  std::vector<const SelectionInput*> remaining;
  std::set<std::string> seen_keys;
  for (const SelectionInput& input : pool) {
    if (seen_keys.insert(input.candidate.canonical_key).second) {
      remaining.push_back(&input);
    }
  }

  std::vector<ScoredCandidate> selected;
  std::vector<const dsl::FormulaAst*> selected_asts;
  std::map<dsl::Family, int> family_counts;

  while (static_cast<int>(selected.size()) < k && !remaining.empty()) {
    const SelectionInput* best = nullptr;
    ScoreBreakdown best_breakdown;
    double best_score = 0.0;

    for (const SelectionInput* entry : remaining) {
      const dsl::Family family = entry->candidate.family;
      const int family_count = family_counts.contains(family)
                                   ? family_counts.at(family)
                                   : 0;
      if (family_count >= config.family_cap) {
        continue;  // hard cap: ineligible regardless of score
      }
      double max_similarity = 0.0;
      for (const dsl::FormulaAst* ast : selected_asts) {
        max_similarity =
            std::max(max_similarity, dsl::FormulaSimilarity(entry->ast, *ast));
      }
      ScoreBreakdown breakdown = entry->candidate.score;
      breakdown.similarity_penalty =
          ProximityPenalty(max_similarity, config.similarity_threshold,
                           config.similarity_scale);
      breakdown.family_penalty =
          config.family_scale * static_cast<double>(family_count);
      breakdown.novelty_bonus = family_count == 0 ? config.novelty_bonus : 0.0;
      const double adjusted = breakdown.Adjusted();

      if (best == nullptr || adjusted > best_score ||
          (adjusted == best_score &&
           entry->candidate.canonical_key < best->candidate.canonical_key)) {
        best = entry;
        best_breakdown = breakdown;
        best_score = adjusted;
      }
    }

    if (best == nullptr) {
      break;  // every remaining family is capped
    }

    ScoredCandidate winner = best->candidate;
    winner.score = best_breakdown;
    winner.selected = true;
    selected.push_back(std::move(winner));
    selected_asts.push_back(&best->ast);
    family_counts[best->candidate.family] += 1;
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
  }

  return selected;
}

}  // namespace ff::scoring
