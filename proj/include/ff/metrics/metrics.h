#pragma once

#include <string>
#include <vector>

#include "ff/core/matrix.h"
#include "ff/panel/align.h"

namespace ff::metrics {

enum class CorrelationKind { kSpearman, kPearson };

struct IcSeries {
  CorrelationKind kind = CorrelationKind::kSpearman;
  std::vector<std::string> dates;
  std::vector<double> values;
};

struct IcAggregate {
  double mean = kMissing;
  double std_dev = kMissing;
  double daily_ir = kMissing;       // mean / std
  double annualized_ir = kMissing;  // daily IR * sqrt(252)
};

inline constexpr double kAnnualizationDays = 252.0;

struct BucketProfile {
  int bucket_count = 0;
  std::vector<double> bucket_means;      // time-averaged mean forward return, bottom first
  std::vector<std::string> dates;        // dates contributing to the long-short series
  std::vector<double> long_short;        // per-date top-minus-bottom spread
  double long_short_mean = kMissing;
};

struct TurnoverStats {
  double top_decile = kMissing;  // mean Jaccard distance of consecutive top sets
  double rank = kMissing;        // mean absolute normalized-rank change
};

// Per-date cross-sectional correlation between factor and label rows over
// jointly present cells. Dates where either side is constant contribute 0.
IcSeries DailyIc(const panel::AlignedPair& aligned, CorrelationKind kind);

// Sample std; information ratios are missing when the series is constant.
bool AggregateIc(const IcSeries& series, IcAggregate* out, std::string* out_error);

// Assets sorted by factor ascending, split into bucket_count equal groups;
// when n = q * buckets + r, the r highest-factor buckets take the extra
// asset. Ties break by asset order. Dates with fewer present pairs than
// bucket_count are skipped.
bool ComputeBucketProfile(const panel::AlignedPair& aligned, int bucket_count,
                          BucketProfile* out, std::string* out_error);

// Jaccard distance 1 - |A∩B|/|A∪B| between consecutive top-decile sets
// (decile size ceil(n/10), ties by asset order), averaged over date pairs.
bool TurnoverTopDecile(const panel::AlignedPair& aligned, double* out,
                       std::string* out_error);

// Mean |normalized-rank(t) - normalized-rank(t-1)| over assets present on
// both dates, averaged over date pairs.
bool TurnoverRank(const panel::AlignedPair& aligned, double* out,
                  std::string* out_error);

}  // namespace ff::metrics
