#include "ff/mining/prompt.h"

#include <sstream>

#include "ff/core/numeric.h"

namespace ff::mining {

namespace {

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += names[i];
  }
  return out.empty() ? "none" : out;
}

}  // namespace

nlohmann::json PromptBundle::ToJson() const {
  nlohmann::json doc;
  doc["static_prefix"] = static_prefix;
  doc["dynamic_suffix"] = dynamic_suffix;
  doc["round_index"] = round_index;
  doc["batch_size"] = batch_size;
  doc["batch_kind"] = batch_kind;
  doc["reference_ids"] = reference_ids;
  doc["under_explored"] = under_explored;
  return doc;
}

std::string RoundFeedback::DigestText() const {
  std::ostringstream out;
  out << "Top formulas so far:\n";
  if (top_formulas.empty()) {
    out << "  (none succeeded)\n";
  }
  for (const TopFormula& top : top_formulas) {
    out << "  " << top.formula << "  [family " << top.family << ", score "
        << FormatNumber(top.score) << "]\n";
  }
  out << "Error summary:";
  if (error_counts.empty()) {
    out << " none";
  }
  for (const auto& [kind, count] : error_counts) {
    out << " " << kind << "=" << count;
  }
  out << "\n";
  out << "Top families: " << JoinNames(top_families) << "\n";
  out << "Over-explored families: " << JoinNames(over_explored) << "\n";
  out << "Under-explored families: " << JoinNames(under_explored) << "\n";
  return out.str();
}

nlohmann::json RoundFeedback::ToJson() const {
  nlohmann::json doc;
  nlohmann::json tops = nlohmann::json::array();
  for (const TopFormula& top : top_formulas) {
    nlohmann::json entry;
    entry["formula"] = top.formula;
    entry["family"] = top.family;
    entry["score"] = FormatNumber(top.score);
    tops.push_back(entry);
  }
  doc["top_formulas"] = tops;
  doc["error_counts"] = error_counts;
  doc["top_families"] = top_families;
  doc["over_explored"] = over_explored;
  doc["under_explored"] = under_explored;
  doc["positive_ref_ids"] = positive_ref_ids;
  doc["negative_ref_ids"] = negative_ref_ids;
  doc["model_id"] = model_id;
  doc["prompt_tokens"] = prompt_tokens;
  doc["completion_tokens"] = completion_tokens;
  doc["timestamp"] = timestamp;
  return doc;
}

RoundFeedback RoundFeedback::FromJson(const nlohmann::json& doc) {
  RoundFeedback feedback;
  for (const auto& entry : doc.value("top_formulas", nlohmann::json::array())) {
    TopFormula top;
    top.formula = entry.value("formula", "");
    top.family = entry.value("family", "other");
    top.score = entry["score"].is_string()
                    ? ParseNumber(entry["score"].get<std::string>())
                    : entry.value("score", 0.0);
    feedback.top_formulas.push_back(std::move(top));
  }
  if (doc.contains("error_counts")) {
    for (const auto& [key, value] : doc["error_counts"].items()) {
      feedback.error_counts[key] = value.get<long>();
    }
  }
  feedback.top_families = doc.value("top_families", std::vector<std::string>{});
  feedback.over_explored = doc.value("over_explored", std::vector<std::string>{});
  feedback.under_explored = doc.value("under_explored", std::vector<std::string>{});
  feedback.positive_ref_ids =
      doc.value("positive_ref_ids", std::vector<std::string>{});
  feedback.negative_ref_ids =
      doc.value("negative_ref_ids", std::vector<std::string>{});
  feedback.model_id = doc.value("model_id", "");
  feedback.prompt_tokens = doc.value("prompt_tokens", 0L);
  feedback.completion_tokens = doc.value("completion_tokens", 0L);
  feedback.timestamp = doc.value("timestamp", "");
  return feedback;
}

std::string OperatorDocumentation(const dsl::OperatorRegistry& registry) {
  std::ostringstream out;
  out << "Formula language reference.\n";
  out << "Data fields (daily, per asset): ";
  for (std::size_t i = 0; i < registry.fields().size(); ++i) {
    if (i > 0) {
      out << ", ";
    }
    out << registry.fields()[i];
  }
  out << ".\n";
  out << "Registered operators:\n";
  for (const dsl::OperatorSpec& spec : registry.operators()) {
    out << "  " << spec.name << "/" << spec.arity << "  ["
        << dsl::OperatorKindName(spec.kind) << "]";
    if (!spec.window_positions.empty()) {
      out << "  window argument index:";
      for (int pos : spec.window_positions) {
        out << " " << pos;
      }
      out << " (positive integer literal, 1..252)";
    }
    out << "\n";
  }
  out << "Expressions may combine fields and operator calls with + - * /, "
         "unary minus, comparisons (< <= > >= == !=), and parentheses. "
         "No other syntax is accepted.\n";
  return out.str();
}

PromptBundle BuildPrompt(int round_index, int batch_size,
                         const std::optional<RoundFeedback>& feedback,
                         const corpus::Corpus& corpus,
                         const corpus::CoverageState& coverage,
                         const RunConfig& config,
                         const dsl::OperatorRegistry& registry) {
  PromptBundle bundle;
  bundle.round_index = round_index;
  bundle.batch_size = batch_size;
  bundle.static_prefix = OperatorDocumentation(registry);

  std::ostringstream suffix;
  suffix << "Generate " << batch_size
         << " candidate alpha factor formulas, one per line, inside a single "
            "fenced code block (```). A line may end with an optional "
            "annotation `family: <name>`.\n";
  suffix << "Diversity requirement: spread candidates across the factor "
            "families price-trend, mean-reversion, volatility, range, "
            "liquidity-volume, and price-volume-interaction.\n";

  if (feedback.has_value()) {
    suffix << "\nFeedback from the previous batch:\n" << feedback->DigestText();
    bundle.under_explored = feedback->under_explored;
  }

  if (config.rag_enabled) {
    const auto positives =
        corpus.RetrievePositive(coverage, config.positive_refs, config.seed);
    const auto negatives = corpus.RetrieveNegative(config.negative_refs);
    if (!positives.empty()) {
      suffix << "\nReference mechanisms worth exploring:\n";
      for (const corpus::CorpusEntry& entry : positives) {
        suffix << "  " << entry.formula << "  [" << dsl::FamilyName(entry.family)
               << "] " << entry.note << "\n";
        bundle.reference_ids.push_back(entry.id);
      }
    }
    if (!negatives.empty()) {
      suffix << "\nCrowded templates to avoid (do not re-parameterize these):\n";
      for (const corpus::CorpusEntry& entry : negatives) {
        suffix << "  " << entry.formula << "  [" << dsl::FamilyName(entry.family)
               << "] " << entry.note << "\n";
        bundle.reference_ids.push_back(entry.id);
      }
    }
  }

  bundle.dynamic_suffix = suffix.str();
  return bundle;
}

}  // namespace ff::mining
