#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ff/corpus/corpus.h"
#include "ff/dsl/parser.h"
#include "ff/dsl/sandbox.h"
#include "ff/metrics/report.h"
#include "ff/mining/config.h"
#include "ff/mining/generator.h"
#include "ff/mining/prompt.h"
#include "ff/panel/panel.h"
#include "ff/scoring/score_config.h"
#include "ff/store/run_store.h"

namespace ff::mining {

// Terminal classification for every candidate. Everything except kOk counts
// as an error; kDegenerate and kEvalError additionally count as evaluated,
// since they were dispatched to the engine.
enum class OutcomeClass {
  kOk,
  kParseError,
  kRejectedStructural,
  kRejectedComplexity,
  kRejectedSemantic,
  kDuplicate,
  kEvalError,
  kDegenerate,
};

const char* OutcomeClassName(OutcomeClass outcome);
bool CountsAsEvaluated(OutcomeClass outcome);

struct CandidateOutcome {
  OutcomeClass outcome = OutcomeClass::kParseError;
  std::string text;            // raw generator output
  std::string reason;          // failure detail, empty for kOk
  std::string formula;         // canonical text once parsed and validated
  std::string canonical_key;
  dsl::Family family = dsl::Family::kOther;
  double base_score = kMissing;
  double crowding_penalty = kMissing;
  double provisional_score = kMissing;  // base - crowding
  std::optional<metrics::EvalReport> report;  // kOk only
};

// Everything immutable a candidate needs on its way through the pipeline.
struct PipelineContext {
  dsl::OperatorRegistry registry;
  dsl::SandboxPolicy policy;
  panel::Panel panel;
  panel::LabelMatrix labels;
  scoring::ScoreConfig score_config;
  std::vector<dsl::FormulaAst> negative_templates;
  metrics::EvalReportOptions report_options;
  int min_assets_per_date = 30;
};

// Mutable per-run memory shared across rounds.
struct RunState {
  std::set<std::string> seen_keys;  // canonical keys dispatched to evaluation
  corpus::CoverageState coverage;
};

// parse -> three-layer validation -> duplicate check -> evaluate -> metrics
// -> score. Total: any byte string reaches exactly one terminal outcome and
// nothing ever escapes as an exception. Duplicates short-circuit before
// evaluation.
CandidateOutcome ProcessCandidate(const std::string& text,
                                  std::optional<dsl::Family> declared_family,
                                  const PipelineContext& context,
                                  RunState* state);

struct RoundCounts {
  int round_index = 0;
  int candidates = 0;  // primary batch size
  int evaluated = 0;   // dispatched to the engine (both batches)
  int ok = 0;
  int errors = 0;
  double best_score = kMissing;
};

struct RunSummary {
  std::vector<RoundCounts> rounds;
  RoundCounts totals;
  int selected = 0;
  bool completed = false;  // false when stopped early at a checkpoint
  std::string run_dir;
};

inline constexpr int kGeneratorRetryAttempts = 3;

// One mining run bound to a run directory. Start() creates the directory and
// manifest; Resume() reopens an interrupted run at its last completed round.
// The generator is caller-owned and must outlive the run.
class MiningRun {
 public:
  static bool Start(const RunConfig& config, Generator* generator,
                    std::unique_ptr<MiningRun>* out, std::string* out_error);
  static bool Resume(const std::string& run_dir, Generator* generator,
                     std::unique_ptr<MiningRun>* out, std::string* out_error);

  // Runs the remaining rounds, then final selection and report emission.
  // On generator exhaustion the error is reported and the checkpoint of the
  // last completed round stays intact.
  bool Execute(RunSummary* out, std::string* out_error);

  const std::string& run_dir() const { return writer_.dir(); }

  // Test hook: shrink the transport retry backoff (milliseconds).
  void set_retry_backoff_ms(int ms) { retry_backoff_ms_ = ms; }

 private:
  MiningRun() = default;

  static bool BuildContext(const RunConfig& config, PipelineContext* context,
                           corpus::Corpus* corpus, std::string* out_error);

  bool RunRound(int round_index, RoundCounts* counts, std::string* out_error);
  bool GenerateWithRetry(const PromptBundle& bundle, GenerationResult* result,
                         std::string* out_error);
  bool ProcessBatch(int round_index, const std::string& batch_kind,
                    const std::vector<GeneratedCandidate>& candidates,
                    std::vector<CandidateOutcome>* outcomes,
                    std::string* out_error);
  RoundFeedback CompileFeedback(const std::vector<CandidateOutcome>& outcomes,
                                const std::vector<std::string>& reference_ids,
                                const GenerationResult& primary,
                                const GenerationResult& feedback_batch) const;
  bool FinalizeSelection(int* selected_count, std::string* out_error);
  bool SaveCheckpoint(int completed_round, std::string* out_error);
  bool LoadCheckpoint(std::string* out_error);

  RunConfig config_;
  Generator* generator_ = nullptr;
  PipelineContext context_;
  corpus::Corpus corpus_;
  RunState state_;
  store::RunWriter writer_;
  std::optional<RoundFeedback> last_feedback_;
  int completed_rounds_ = 0;
  int retry_backoff_ms_ = 1000;
};

// Convenience used by the CLI and tests: construct the configured generator.
std::unique_ptr<Generator> MakeGenerator(const RunConfig& config);

}  // namespace ff::mining
