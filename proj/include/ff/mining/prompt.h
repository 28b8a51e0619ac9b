#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ff/corpus/corpus.h"
#include "ff/dsl/registry.h"
#include "ff/mining/config.h"

namespace ff::mining {

// What the generator sees: a static operator-documentation prefix and a
// dynamic suffix with instructions, the family-diversity requirement,
// optional prior-round feedback, and optional retrieval references.
struct PromptBundle {
  std::string static_prefix;
  std::string dynamic_suffix;
  int round_index = 1;
  int batch_size = 0;
  std::string batch_kind = "primary";  // or "feedback"
  std::vector<std::string> reference_ids;
  std::vector<std::string> under_explored;  // family names, machine-readable

  nlohmann::json ToJson() const;
};

// Compiled at the end of each round and embedded into the next round's
// prompt.
struct RoundFeedback {
  struct TopFormula {
    std::string formula;
    std::string family;
    double score = 0.0;
  };
  std::vector<TopFormula> top_formulas;
  std::map<std::string, long> error_counts;  // outcome class -> count
  std::vector<std::string> top_families;
  std::vector<std::string> over_explored;
  std::vector<std::string> under_explored;
  std::vector<std::string> positive_ref_ids;
  std::vector<std::string> negative_ref_ids;
  std::string model_id;
  long prompt_tokens = 0;
  long completion_tokens = 0;
  std::string timestamp;

  // Prompt-facing digest; deliberately free of timestamps and token counts
  // so generation stays reproducible.
  std::string DigestText() const;

  nlohmann::json ToJson() const;
  static RoundFeedback FromJson(const nlohmann::json& doc);
};

std::string OperatorDocumentation(const dsl::OperatorRegistry& registry);

// Round 1 carries no feedback digest; later rounds embed the prior round's.
// References appear only when RAG is enabled.
PromptBundle BuildPrompt(int round_index, int batch_size,
                         const std::optional<RoundFeedback>& feedback,
                         const corpus::Corpus& corpus,
                         const corpus::CoverageState& coverage,
                         const RunConfig& config,
                         const dsl::OperatorRegistry& registry);

}  // namespace ff::mining
