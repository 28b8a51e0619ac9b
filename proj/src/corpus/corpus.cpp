#include "ff/corpus/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "ff/core/rng.h"
#include "ff/dsl/parser.h"

namespace ff::corpus {

bool Corpus::Load(const std::string& path, Corpus* out,
                  std::vector<std::string>* warnings, std::string* out_error) {
  std::ifstream in(path);
  if (!in.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot open corpus file: " + path;
    }
    return false;
  }

  Corpus corpus;
  std::set<std::string> ids;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    line_number += 1;
    if (line.empty()) {
      continue;
    }
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      if (out_error != nullptr) {
        *out_error = "malformed corpus record at line " + std::to_string(line_number);
      }
      return false;
    }
    CorpusEntry entry;
    if (!doc.contains("id") || !doc.contains("channel") || !doc.contains("family")) {
      if (out_error != nullptr) {
        *out_error = "corpus record missing id/channel/family at line " +
                     std::to_string(line_number);
      }
      return false;
    }
    entry.id = doc["id"].get<std::string>();
    if (!ids.insert(entry.id).second) {
      if (out_error != nullptr) {
        *out_error = "duplicate corpus identifier: " + entry.id;
      }
      return false;
    }
    const std::string channel = doc["channel"].get<std::string>();
    if (channel == "positive") {
      entry.channel = Channel::kPositive;
    } else if (channel == "negative") {
      entry.channel = Channel::kNegative;
    } else {
      if (out_error != nullptr) {
        *out_error = "unknown channel '" + channel + "' for corpus entry " + entry.id;
      }
      return false;
    }
    const std::string family = doc["family"].get<std::string>();
    auto parsed_family = dsl::ParseFamilyName(family);
    if (parsed_family.has_value()) {
      entry.family = *parsed_family;
    } else {
      entry.family = dsl::Family::kOther;
      if (warnings != nullptr) {
        warnings->push_back("corpus entry " + entry.id + ": unknown family '" +
                            family + "' mapped to other");
      }
    }
    entry.formula = doc.value("formula", std::string());
    entry.note = doc.value("note", std::string());
    entry.weight = doc.value("weight", 1.0);
    corpus.entries_.push_back(std::move(entry));
  }

  *out = std::move(corpus);
  return true;
}

std::vector<const CorpusEntry*> Corpus::ByChannel(Channel channel) const {
  std::vector<const CorpusEntry*> out;
  for (const CorpusEntry& entry : entries_) {
    if (entry.channel == channel) {
      out.push_back(&entry);
    }
  }
  return out;
}

std::vector<CorpusEntry> Corpus::RetrievePositive(const CoverageState& coverage,
                                                  int n, std::uint64_t seed) const {
  std::vector<CorpusEntry> result;
  if (n <= 0) {
    return result;
  }

  // Group positives by family, per-family order shuffled by the seed.
  std::map<dsl::Family, std::vector<const CorpusEntry*>> by_family;
  for (const CorpusEntry& entry : entries_) {
    if (entry.channel == Channel::kPositive) {
      by_family[entry.family].push_back(&entry);
    }
  }
  for (auto& [family, list] : by_family) {
    std::sort(list.begin(), list.end(),
              [](const CorpusEntry* a, const CorpusEntry* b) { return a->id < b->id; });
    Rng rng(DeriveSeed(seed, static_cast<std::uint64_t>(family)));
    for (std::size_t i = list.size(); i > 1; --i) {
      const std::size_t j =
          static_cast<std::size_t>(rng.UniformInt(0, static_cast<std::int64_t>(i) - 1));
      std::swap(list[i - 1], list[j]);
    }
  }

  // Families in ascending run-coverage order, ties by family enum order.
  std::vector<dsl::Family> families;
  for (const auto& [family, list] : by_family) {
    families.push_back(family);
  }
  std::stable_sort(families.begin(), families.end(),
                   [&coverage](dsl::Family a, dsl::Family b) {
                     return coverage.RunCount(a) < coverage.RunCount(b);
                   });

  std::map<dsl::Family, std::size_t> cursor;
  bool advanced = true;
  while (static_cast<int>(result.size()) < n && advanced) {
    advanced = false;
    for (dsl::Family family : families) {
      if (static_cast<int>(result.size()) >= n) {
        break;
      }
      auto& list = by_family[family];
      std::size_t& pos = cursor[family];
      if (pos < list.size()) {
        result.push_back(*list[pos]);
        pos += 1;
        advanced = true;
      }
    }
  }
  return result;
}

std::vector<CorpusEntry> Corpus::RetrieveNegative(int n) const {
  std::vector<CorpusEntry> result;
  if (n <= 0) {
    return result;
  }
  std::vector<const CorpusEntry*> negatives = ByChannel(Channel::kNegative);
  std::sort(negatives.begin(), negatives.end(),
            [](const CorpusEntry* a, const CorpusEntry* b) {
              if (a->weight != b->weight) {
                return a->weight > b->weight;
              }
              return a->id < b->id;
            });
  for (const CorpusEntry* entry : negatives) {
    if (static_cast<int>(result.size()) >= n) {
      break;
    }
    result.push_back(*entry);
  }
  return result;
}

std::vector<dsl::FormulaAst> Corpus::NegativeTemplates(
    std::vector<std::string>* warnings) const {
  std::vector<dsl::FormulaAst> templates;
  for (const CorpusEntry& entry : entries_) {
    if (entry.channel != Channel::kNegative) {
      continue;
    }
    dsl::ParseError error;
    auto ast = dsl::ParseFormula(entry.formula, &error);
    if (ast.has_value()) {
      templates.push_back(std::move(*ast));
    } else if (warnings != nullptr) {
      warnings->push_back("negative template " + entry.id +
                          " skipped: " + error.message);
    }
  }
  return templates;
}

}  // namespace ff::corpus
