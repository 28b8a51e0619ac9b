#pragma once

#include <map>
#include <string>

#include "ff/dsl/analysis.h"
#include "ff/metrics/hac.h"
#include "ff/metrics/metrics.h"
#include "ff/panel/align.h"

namespace ff::metrics {

// Everything the pipeline knows about one evaluated factor. Self-contained:
// reporting and plotting layers only ever read this.
struct EvalReport {
  panel::AlignmentStats alignment;
  IcSeries rank_ic;
  IcSeries ic;
  IcAggregate rank_ic_agg;
  IcAggregate ic_agg;
  BucketProfile buckets;
  TurnoverStats turnover;
  HacTest rank_ic_hac;
  HacTest ic_hac;
  HacTest long_short_hac;
  dsl::ComplexityProfile complexity;
};

struct EvalReportOptions {
  int bucket_count = 10;
};

// Requires at least 2 evaluation dates; fewer is a degenerate candidate.
bool BuildEvalReport(const panel::AlignedPair& aligned,
                     const panel::AlignmentStats& stats,
                     const dsl::ComplexityProfile& complexity,
                     const EvalReportOptions& options, EvalReport* out,
                     std::string* out_error);

// Named raw metrics consumed by the scoring layer.
inline constexpr const char* kMetricNames[] = {
    "rank_ic_mean",       "rank_icir_ann", "ic_mean",
    "icir_ann",           "long_short_mean", "turnover_top_decile",
    "turnover_rank",      "coverage",      "drop_ratio",
    "complexity_nodes",
};

std::map<std::string, double> MetricVectorFrom(const EvalReport& report);

}  // namespace ff::metrics
