#include "ff/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "ff/engine/kernels.h"
#include "ff/metrics/correlation.h"

namespace ff::metrics {

namespace {

void PresentPairs(const panel::AlignedPair& aligned, std::size_t row,
                  std::vector<double>* factor, std::vector<double>* labels,
                  std::vector<std::size_t>* indices) {
  factor->clear();
  labels->clear();
  if (indices != nullptr) {
    indices->clear();
  }
  for (std::size_t a = 0; a < aligned.assets.size(); ++a) {
    const double f = aligned.factor.at(row, a);
    const double l = aligned.labels.at(row, a);
    if (IsPresent(f) && IsPresent(l)) {
      factor->push_back(f);
      labels->push_back(l);
      if (indices != nullptr) {
        indices->push_back(a);
      }
    }
  }
}

// Top-set membership by descending factor value, ties by asset order.
std::set<std::size_t> TopSet(const std::vector<double>& factor,
                             const std::vector<std::size_t>& assets,
                             std::size_t count) {
  std::vector<std::size_t> order(factor.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (factor[a] != factor[b]) {
      return factor[a] > factor[b];
    }
    return assets[a] < assets[b];
  });
  std::set<std::size_t> top;
  for (std::size_t i = 0; i < std::min(count, order.size()); ++i) {
    top.insert(assets[order[i]]);
  }
  return top;
}

}  // namespace

IcSeries DailyIc(const panel::AlignedPair& aligned, CorrelationKind kind) {
  IcSeries series;
  series.kind = kind;
  std::vector<double> factor;
  std::vector<double> labels;
  for (std::size_t row = 0; row < aligned.dates.size(); ++row) {
    PresentPairs(aligned, row, &factor, &labels, nullptr);
    if (factor.empty()) {
      continue;
    }
    const double value = kind == CorrelationKind::kSpearman
                             ? Spearman(factor, labels)
                             : Pearson(factor, labels);
    series.dates.push_back(aligned.dates[row]);
    series.values.push_back(value);
  }
  return series;
}

bool AggregateIc(const IcSeries& series, IcAggregate* out, std::string* out_error) {
  const std::size_t n = series.values.size();
  if (n < 2) {
    if (out_error != nullptr) {
      *out_error = "IC series too short to aggregate";
    }
    return false;
  }
  double mean = 0.0;
  for (double v : series.values) {
    mean += v;
  }
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : series.values) {
    var += (v - mean) * (v - mean);
  }
  var /= static_cast<double>(n - 1);

  out->mean = mean;
  out->std_dev = std::sqrt(var);
  if (out->std_dev > 0.0) {
    out->daily_ir = mean / out->std_dev;
    out->annualized_ir = out->daily_ir * std::sqrt(kAnnualizationDays);
  } else {
    out->daily_ir = kMissing;
    out->annualized_ir = kMissing;
  }
  return true;
}

bool ComputeBucketProfile(const panel::AlignedPair& aligned, int bucket_count,
                          BucketProfile* out, std::string* out_error) {
  if (bucket_count < 2) {
    if (out_error != nullptr) {
      *out_error = "bucket count must be at least 2";
    }
    return false;
  }
  const std::size_t buckets = static_cast<std::size_t>(bucket_count);
  BucketProfile profile;
  profile.bucket_count = bucket_count;

  std::vector<double> bucket_sums(buckets, 0.0);
  std::vector<long> bucket_dates(buckets, 0);

  std::vector<double> factor;
  std::vector<double> labels;
  std::vector<std::size_t> assets;
  for (std::size_t row = 0; row < aligned.dates.size(); ++row) {
    PresentPairs(aligned, row, &factor, &labels, &assets);
    const std::size_t n = factor.size();
    if (n < buckets) {
      continue;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (factor[a] != factor[b]) {
        return factor[a] < factor[b];
      }
      return assets[a] < assets[b];
    });

    const std::size_t base = n / buckets;
    const std::size_t remainder = n % buckets;
    std::size_t cursor = 0;
    double bottom_mean = 0.0;
    double top_mean = 0.0;
    for (std::size_t b = 0; b < buckets; ++b) {
      // The r highest-factor buckets absorb the remainder.
      const std::size_t size = base + (b >= buckets - remainder ? 1 : 0);
      double sum = 0.0;
      for (std::size_t i = 0; i < size; ++i) {
        sum += labels[order[cursor + i]];
      }
      cursor += size;
      const double mean = sum / static_cast<double>(size);
      bucket_sums[b] += mean;
      bucket_dates[b] += 1;
      if (b == 0) {
        bottom_mean = mean;
      }
      if (b == buckets - 1) {
        top_mean = mean;
      }
    }
    profile.dates.push_back(aligned.dates[row]);
    profile.long_short.push_back(top_mean - bottom_mean);
  }

  if (profile.long_short.empty()) {
    if (out_error != nullptr) {
      *out_error = "insufficient cross-section for bucket profile on every date";
    }
    return false;
  }

  profile.bucket_means.resize(buckets, kMissing);
  for (std::size_t b = 0; b < buckets; ++b) {
    if (bucket_dates[b] > 0) {
      profile.bucket_means[b] = bucket_sums[b] / static_cast<double>(bucket_dates[b]);
    }
  }
  double ls_mean = 0.0;
  for (double v : profile.long_short) {
    ls_mean += v;
  }
  profile.long_short_mean = ls_mean / static_cast<double>(profile.long_short.size());
  *out = std::move(profile);
  return true;
}

bool TurnoverTopDecile(const panel::AlignedPair& aligned, double* out,
                       std::string* out_error) {
  std::vector<double> factor;
  std::vector<double> labels;
  std::vector<std::size_t> assets;

  std::vector<std::set<std::size_t>> tops;
  for (std::size_t row = 0; row < aligned.dates.size(); ++row) {
    PresentPairs(aligned, row, &factor, &labels, &assets);
    if (factor.empty()) {
      continue;
    }
    const std::size_t decile =
        (factor.size() + 9) / 10;  // ceil(n / 10)
    tops.push_back(TopSet(factor, assets, decile));
  }
  if (tops.size() < 2) {
    if (out_error != nullptr) {
      *out_error = "turnover needs at least 2 evaluation dates";
    }
    return false;
  }
  double total = 0.0;
  for (std::size_t i = 1; i < tops.size(); ++i) {
    const auto& a = tops[i - 1];
    const auto& b = tops[i];
    std::size_t intersection = 0;
    for (std::size_t id : a) {
      if (b.contains(id)) {
        intersection += 1;
      }
    }
    const std::size_t union_size = a.size() + b.size() - intersection;
    total += union_size == 0
                 ? 0.0
                 : 1.0 - static_cast<double>(intersection) /
                             static_cast<double>(union_size);
  }
  *out = total / static_cast<double>(tops.size() - 1);
  return true;
}

bool TurnoverRank(const panel::AlignedPair& aligned, double* out,
                  std::string* out_error) {
  const std::size_t n_assets = aligned.assets.size();
  std::vector<std::vector<double>> normalized_ranks;
  for (std::size_t row = 0; row < aligned.dates.size(); ++row) {
    std::vector<double> joint(n_assets, kMissing);
    bool any = false;
    for (std::size_t a = 0; a < n_assets; ++a) {
      const double f = aligned.factor.at(row, a);
      const double l = aligned.labels.at(row, a);
      if (IsPresent(f) && IsPresent(l)) {
        joint[a] = f;
        any = true;
      }
    }
    if (any) {
      normalized_ranks.push_back(engine::CsRank(joint));
    }
  }
  if (normalized_ranks.size() < 2) {
    if (out_error != nullptr) {
      *out_error = "turnover needs at least 2 evaluation dates";
    }
    return false;
  }
  double date_total = 0.0;
  long date_count = 0;
  for (std::size_t i = 1; i < normalized_ranks.size(); ++i) {
    double asset_total = 0.0;
    long asset_count = 0;
    for (std::size_t a = 0; a < n_assets; ++a) {
      const double now = normalized_ranks[i][a];
      const double before = normalized_ranks[i - 1][a];
      if (IsPresent(now) && IsPresent(before)) {
        asset_total += std::fabs(now - before);
        asset_count += 1;
      }
    }
    if (asset_count > 0) {
      date_total += asset_total / static_cast<double>(asset_count);
      date_count += 1;
    }
  }
  if (date_count == 0) {
    if (out_error != nullptr) {
      *out_error = "no consecutive dates share present assets";
    }
    return false;
  }
  *out = date_total / static_cast<double>(date_count);
  return true;
}

}  // namespace ff::metrics
