#include "ff/panel/align.h"

namespace ff::panel {

bool Align(const Matrix& factor, const Matrix& labels,
           const std::vector<std::string>& calendar,
           const std::vector<std::string>& assets, int min_assets_per_date,
           AlignedPair* out, AlignmentStats* stats, std::string* out_error) {
  if (!factor.same_shape(labels) || factor.rows() != calendar.size() ||
      factor.cols() != assets.size()) {
    if (out_error != nullptr) {
      *out_error = "factor/label axis mismatch";
    }
    return false;
  }

  const std::size_t n_assets = assets.size();
  std::vector<std::size_t> considered;   // dates with >= 1 label present
  std::vector<std::size_t> kept;         // considered dates above threshold
  std::vector<long> survivors_per_date(calendar.size(), 0);

  for (std::size_t d = 0; d < calendar.size(); ++d) {
    bool any_label = false;
    long survivors = 0;
    for (std::size_t a = 0; a < n_assets; ++a) {
      if (IsPresent(labels.at(d, a))) {
        any_label = true;
        if (IsPresent(factor.at(d, a))) {
          survivors += 1;
        }
      }
    }
    if (!any_label) {
      continue;
    }
    considered.push_back(d);
    survivors_per_date[d] = survivors;
    if (survivors >= min_assets_per_date) {
      kept.push_back(d);
    }
  }

  AlignedPair aligned;
  aligned.assets = assets;
  aligned.dates.reserve(kept.size());
  aligned.factor = Matrix(kept.size(), n_assets);
  aligned.labels = Matrix(kept.size(), n_assets);

  long valid_cells = 0;
  for (std::size_t row = 0; row < kept.size(); ++row) {
    const std::size_t d = kept[row];
    aligned.dates.push_back(calendar[d]);
    for (std::size_t a = 0; a < n_assets; ++a) {
      const double f = factor.at(d, a);
      const double l = labels.at(d, a);
      if (IsPresent(f) && IsPresent(l)) {
        aligned.factor.set(row, a, f);
        aligned.labels.set(row, a, l);
        valid_cells += 1;
      }
    }
  }

  if (stats != nullptr) {
    const long considered_cells =
        static_cast<long>(considered.size()) * static_cast<long>(n_assets);
    stats->valid_cells = valid_cells;
    stats->valid_dates = static_cast<long>(kept.size());
    stats->coverage = considered_cells > 0
                          ? static_cast<double>(valid_cells) /
                                static_cast<double>(considered_cells)
                          : 0.0;
    stats->drop_ratio = 1.0 - stats->coverage;
  }
  *out = std::move(aligned);
  return true;
}

}  // namespace ff::panel
