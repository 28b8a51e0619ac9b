#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace ff::mining {

enum class GeneratorKind { kMock, kHttp };

// Full resolved run configuration. Every field is echoed into the run
// manifest so a run directory is self-describing.
struct RunConfig {
  std::string data_path;
  std::optional<std::string> universe_path;
  std::string start_date;  // inclusive ISO bounds; empty = unbounded
  std::string end_date;

  int rounds = 3;
  int batch_size = 20;
  int top_k = 5;
  bool feedback_enabled = true;
  bool rag_enabled = true;

  GeneratorKind generator = GeneratorKind::kMock;
  std::string endpoint;  // chat-completion URL for the HTTP generator
  std::string model;

  std::uint64_t seed = 7;
  std::string score_config_path;
  std::string corpus_path;
  std::string registry_path;
  std::string output_root = "runs";

  int horizon = 1;
  int min_assets_per_date = 30;
  int bucket_count = 10;
  int positive_refs = 4;
  int negative_refs = 4;

  int max_depth = 12;
  int max_nodes = 64;

  double mock_malformed_rate = 0.05;
  double mock_duplicate_rate = 0.15;
  double valid_asset_close_fraction = 0.8;

  // Testing hook: end the run after this round completes (0 = disabled),
  // leaving a resumable checkpoint, as a kill between rounds would.
  int stop_after_round = 0;

  bool Validate(std::string* out_error) const;
  nlohmann::json ToJson() const;
  static bool FromJson(const nlohmann::json& doc, RunConfig* out,
                       std::string* out_error);
};

}  // namespace ff::mining
