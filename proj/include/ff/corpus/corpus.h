#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ff/dsl/analysis.h"
#include "ff/dsl/ast.h"

namespace ff::corpus {

enum class Channel { kPositive, kNegative };

struct CorpusEntry {
  std::string id;
  Channel channel = Channel::kPositive;
  dsl::Family family = dsl::Family::kOther;
  std::string formula;  // formula text or distilled template text
  std::string note;     // mechanism note
  double weight = 1.0;  // crowding weight, negative channel only
};

// Per-family counts: candidates successfully evaluated this run, and members
// of the current selected set.
struct CoverageState {
  std::map<dsl::Family, int> run_counts;
  std::map<dsl::Family, int> selected_counts;

  int RunCount(dsl::Family family) const {
    auto it = run_counts.find(family);
    return it == run_counts.end() ? 0 : it->second;
  }
};

class Corpus {
 public:
  // Line-delimited records with keys id, channel, family, formula, note,
  // optional weight. Unknown family strings map to `other` with a warning;
  // duplicate identifiers and missing channel/family are load errors.
  static bool Load(const std::string& path, Corpus* out,
                   std::vector<std::string>* warnings, std::string* out_error);

  const std::vector<CorpusEntry>& entries() const { return entries_; }
  std::vector<const CorpusEntry*> ByChannel(Channel channel) const;

  // Positive-channel entries, least-covered families first, round-robin
  // across families, deterministic for a fixed (coverage, seed).
  std::vector<CorpusEntry> RetrievePositive(const CoverageState& coverage,
                                            int n, std::uint64_t seed) const;

  // Negative-channel entries by descending crowding weight, ties by id.
  std::vector<CorpusEntry> RetrieveNegative(int n) const;

  // Parsed negative-channel templates for the crowding penalty; entries that
  // fail to parse are skipped with a warning.
  std::vector<dsl::FormulaAst> NegativeTemplates(
      std::vector<std::string>* warnings) const;

 private:
  std::vector<CorpusEntry> entries_;
};

}  // namespace ff::corpus
