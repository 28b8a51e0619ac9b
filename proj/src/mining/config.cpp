#include "ff/mining/config.h"

namespace ff::mining {

bool RunConfig::Validate(std::string* out_error) const {
  auto fail = [out_error](const std::string& message) {
    if (out_error != nullptr) {
      *out_error = message;
    }
    return false;
  };
  if (data_path.empty()) {
    return fail("data path is required");
  }
  if (rounds < 1) {
    return fail("rounds must be at least 1");
  }
  if (batch_size < 1) {
    return fail("batch size must be at least 1");
  }
  if (top_k < 1) {
    return fail("top-k must be at least 1");
  }
  if (horizon < 1) {
    return fail("horizon must be at least 1");
  }
  if (min_assets_per_date < 1) {
    return fail("min assets per date must be at least 1");
  }
  if (bucket_count < 2) {
    return fail("bucket count must be at least 2");
  }
  if (!start_date.empty() && !end_date.empty() && end_date < start_date) {
    return fail("date range is inverted");
  }
  if (generator == GeneratorKind::kHttp && endpoint.empty()) {
    return fail("HTTP generator requires an endpoint URL");
  }
  if (mock_malformed_rate < 0.0 || mock_malformed_rate > 1.0 ||
      mock_duplicate_rate < 0.0 || mock_duplicate_rate > 1.0) {
    return fail("mock rates must lie in [0, 1]");
  }
  return true;
}

nlohmann::json RunConfig::ToJson() const {
  nlohmann::json doc;
  doc["data_path"] = data_path;
  doc["universe_path"] = universe_path.value_or("");
  doc["start_date"] = start_date;
  doc["end_date"] = end_date;
  doc["rounds"] = rounds;
  doc["batch_size"] = batch_size;
  doc["top_k"] = top_k;
  doc["feedback_enabled"] = feedback_enabled;
  doc["rag_enabled"] = rag_enabled;
  doc["generator"] = generator == GeneratorKind::kMock ? "mock" : "http";
  doc["endpoint"] = endpoint;
  doc["model"] = model;
  doc["seed"] = seed;
  doc["score_config_path"] = score_config_path;
  doc["corpus_path"] = corpus_path;
  doc["registry_path"] = registry_path;
  doc["output_root"] = output_root;
  doc["horizon"] = horizon;
  doc["min_assets_per_date"] = min_assets_per_date;
  doc["bucket_count"] = bucket_count;
  doc["positive_refs"] = positive_refs;
  doc["negative_refs"] = negative_refs;
  doc["max_depth"] = max_depth;
  doc["max_nodes"] = max_nodes;
  doc["mock_malformed_rate"] = mock_malformed_rate;
  doc["mock_duplicate_rate"] = mock_duplicate_rate;
  doc["valid_asset_close_fraction"] = valid_asset_close_fraction;
  return doc;
}

bool RunConfig::FromJson(const nlohmann::json& doc, RunConfig* out,
                         std::string* out_error) {
  try {
    RunConfig config;
    config.data_path = doc.value("data_path", "");
    const std::string universe = doc.value("universe_path", "");
    if (!universe.empty()) {
      config.universe_path = universe;
    }
    config.start_date = doc.value("start_date", "");
    config.end_date = doc.value("end_date", "");
    config.rounds = doc.value("rounds", 3);
    config.batch_size = doc.value("batch_size", 20);
    config.top_k = doc.value("top_k", 5);
    config.feedback_enabled = doc.value("feedback_enabled", true);
    config.rag_enabled = doc.value("rag_enabled", true);
    config.generator = doc.value("generator", "mock") == "http"
                           ? GeneratorKind::kHttp
                           : GeneratorKind::kMock;
    config.endpoint = doc.value("endpoint", "");
    config.model = doc.value("model", "");
    config.seed = doc.value("seed", static_cast<std::uint64_t>(7));
    config.score_config_path = doc.value("score_config_path", "");
    config.corpus_path = doc.value("corpus_path", "");
    config.registry_path = doc.value("registry_path", "");
    config.output_root = doc.value("output_root", "runs");
    config.horizon = doc.value("horizon", 1);
    config.min_assets_per_date = doc.value("min_assets_per_date", 30);
    config.bucket_count = doc.value("bucket_count", 10);
    config.positive_refs = doc.value("positive_refs", 4);
    config.negative_refs = doc.value("negative_refs", 4);
    config.max_depth = doc.value("max_depth", 12);
    config.max_nodes = doc.value("max_nodes", 64);
    config.mock_malformed_rate = doc.value("mock_malformed_rate", 0.05);
    config.mock_duplicate_rate = doc.value("mock_duplicate_rate", 0.15);
    config.valid_asset_close_fraction =
        doc.value("valid_asset_close_fraction", 0.8);
    if (!config.Validate(out_error)) {
      return false;
    }
    *out = std::move(config);
    return true;
  } catch (const nlohmann::json::exception& e) {
    if (out_error != nullptr) {
      *out_error = std::string("malformed run config: ") + e.what();
    }
    return false;
  }
}

}  // namespace ff::mining
