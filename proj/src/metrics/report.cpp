#include "ff/metrics/report.h"

namespace ff::metrics {

bool BuildEvalReport(const panel::AlignedPair& aligned,
                     const panel::AlignmentStats& stats,
                     const dsl::ComplexityProfile& complexity,
                     const EvalReportOptions& options, EvalReport* out,
                     std::string* out_error) {
  if (aligned.dates.size() < 2) {
    if (out_error != nullptr) {
      *out_error = "degenerate candidate: fewer than 2 evaluation dates";
    }
    return false;
  }

  EvalReport report;
  report.alignment = stats;
  report.complexity = complexity;

  report.rank_ic = DailyIc(aligned, CorrelationKind::kSpearman);
  report.ic = DailyIc(aligned, CorrelationKind::kPearson);
  if (report.rank_ic.values.size() < 2) {
    if (out_error != nullptr) {
      *out_error = "degenerate candidate: IC series too short";
    }
    return false;
  }
  std::string error;
  if (!AggregateIc(report.rank_ic, &report.rank_ic_agg, &error) ||
      !AggregateIc(report.ic, &report.ic_agg, &error)) {
    if (out_error != nullptr) {
      *out_error = error;
    }
    return false;
  }

  if (!ComputeBucketProfile(aligned, options.bucket_count, &report.buckets,
                            &error)) {
    // A cross-section too thin for buckets is degenerate even when the IC
    // series itself was computable.
    if (out_error != nullptr) {
      *out_error = error;
    }
    return false;
  }

  if (!TurnoverTopDecile(aligned, &report.turnover.top_decile, &error) ||
      !TurnoverRank(aligned, &report.turnover.rank, &error)) {
    if (out_error != nullptr) {
      *out_error = error;
    }
    return false;
  }

  report.rank_ic_hac = ComputeHacTest(report.rank_ic.values);
  report.ic_hac = ComputeHacTest(report.ic.values);
  report.long_short_hac = ComputeHacTest(report.buckets.long_short);

  *out = std::move(report);
  return true;
}

std::map<std::string, double> MetricVectorFrom(const EvalReport& report) {
  std::map<std::string, double> metrics;
  metrics["rank_ic_mean"] = report.rank_ic_agg.mean;
  metrics["rank_icir_ann"] = report.rank_ic_agg.annualized_ir;
  metrics["ic_mean"] = report.ic_agg.mean;
  metrics["icir_ann"] = report.ic_agg.annualized_ir;
  metrics["long_short_mean"] = report.buckets.long_short_mean;
  metrics["turnover_top_decile"] = report.turnover.top_decile;
  metrics["turnover_rank"] = report.turnover.rank;
  metrics["coverage"] = report.alignment.coverage;
  metrics["drop_ratio"] = report.alignment.drop_ratio;
  metrics["complexity_nodes"] = static_cast<double>(report.complexity.node_count);
  return metrics;
}

}  // namespace ff::metrics
