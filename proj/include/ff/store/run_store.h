#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ff/metrics/report.h"
#include "ff/scoring/scoring.h"

namespace ff::store {

// Numbers inside artifacts and reports are serialized as decimal strings
// (12 significant digits) so regenerated files stay byte-identical.
void PutNumber(nlohmann::json& obj, const std::string& key, double value);
double GetNumber(const nlohmann::json& obj, const std::string& key);

nlohmann::json EvalReportToJson(const metrics::EvalReport& report);
bool EvalReportFromJson(const nlohmann::json& doc, metrics::EvalReport* out,
                        std::string* out_error);

// Self-contained per-factor diagnostics file: formula, family, complexity,
// the full evaluation report, and the score breakdown.
struct FactorArtifact {
  std::string formula;
  std::string canonical_key;
  std::string family;
  metrics::EvalReport report;
  scoring::ScoreBreakdown score;
};

nlohmann::json FactorArtifactToJson(const FactorArtifact& artifact);
bool FactorArtifactFromJson(const nlohmann::json& doc, FactorArtifact* out,
                            std::string* out_error);

// One run = one directory:
//   manifest.json            written once at init, immutable
//   records.jsonl            append-only, one flushed line per record
//   rounds/round-<n>.json    per-round results and feedback
//   prompts/round-<n>-<batch>.json
//   factors/<canonical-key>.json
//   checkpoint.json          resume state, replaced atomically
//   selection.json           final top-k
//   reports/                 summary.json, topk.csv, plot-data CSVs
class RunWriter {
 public:
  struct InitInfo {
    nlohmann::json config;
    std::string panel_fingerprint;
    std::string panel_first_date;
    std::string panel_last_date;
    std::uint64_t seed = 0;
  };

  static bool Init(const std::string& output_root, const InitInfo& info,
                   RunWriter* out, std::string* out_error);
  static bool Open(const std::string& run_dir, RunWriter* out,
                   std::string* out_error);

  const std::string& dir() const { return dir_; }
  long record_count() const { return record_count_; }

  // Appends one line-delimited record and flushes; returns the 1-based
  // position. Records are never rewritten.
  bool AppendRecord(const nlohmann::json& record, long* position,
                    std::string* out_error);

  // One file per canonical key; a second write for the same key is an
  // internal-consistency error because duplicates never reach evaluation.
  bool WriteFactorArtifact(const FactorArtifact& artifact,
                           std::string* out_error);

  bool WriteRoundFile(int round, const nlohmann::json& doc,
                      std::string* out_error);
  bool WritePromptSnapshot(int round, const std::string& batch,
                           const nlohmann::json& doc, std::string* out_error);
  // Temp-file-plus-rename so a kill never leaves a torn checkpoint.
  bool WriteCheckpoint(const nlohmann::json& doc, std::string* out_error);
  bool WriteSelection(const nlohmann::json& doc, std::string* out_error);

  bool ReadManifest(nlohmann::json* out, std::string* out_error) const;
  bool ReadCheckpoint(nlohmann::json* out, std::string* out_error) const;

 private:
  std::string dir_;
  long record_count_ = 0;
};

// Reads every well-formed record line; a trailing torn line (crash during
// append) is ignored.
bool ReadRecords(const std::string& run_dir,
                 std::vector<nlohmann::json>* out, std::string* out_error);

bool ReadJsonFile(const std::string& path, nlohmann::json* out,
                  std::string* out_error);
bool WriteJsonFile(const std::string& path, const nlohmann::json& doc,
                   std::string* out_error);

}  // namespace ff::store
