#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ff/dsl/analysis.h"
#include "ff/mining/prompt.h"

namespace ff::mining {

struct GeneratedCandidate {
  std::string text;
  std::optional<dsl::Family> declared_family;
};

struct GenerationResult {
  std::vector<GeneratedCandidate> candidates;
  std::string model_id;
  long prompt_tokens = 0;
  long completion_tokens = 0;
  // Raw request/response snapshots for the run store. Untouched by the loop.
  nlohmann::json request_snapshot;
  nlohmann::json response_snapshot;
};

// Candidate source. Output is untrusted text; every constraint is enforced
// downstream by the sandbox. Returns false only for transport-level failures
// (which the loop retries); an empty batch is a successful result.
class Generator {
 public:
  virtual ~Generator() = default;
  virtual bool Generate(const PromptBundle& bundle, GenerationResult* out,
                        std::string* out_error) = 0;
};

// Response contract shared by the HTTP generator and its tests: formulas
// live one per line inside the first fenced block, each line optionally
// ending in `family: <name>`.
std::vector<GeneratedCandidate> ExtractCandidates(const std::string& content);

}  // namespace ff::mining
