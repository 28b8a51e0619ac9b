#pragma once

#include <string>
#include <vector>

#include "ff/core/matrix.h"
#include "ff/panel/panel.h"

namespace ff::panel {

struct AlignmentStats {
  double coverage = 0.0;    // valid cells / considered cells
  double drop_ratio = 0.0;  // 1 - coverage
  long valid_cells = 0;
  long valid_dates = 0;
};

// Factor and label matrices restricted to the evaluation calendar: rows are
// the surviving dates, cells present only where both inputs were present.
struct AlignedPair {
  std::vector<std::string> dates;
  std::vector<std::string> assets;
  Matrix factor;
  Matrix labels;
};

// Per date, keeps cells present in both inputs; dates with fewer than
// min_assets_per_date surviving cells are excluded entirely. Coverage is
// measured against dates that have at least one label cell, so the
// structurally empty label tail does not count as data loss.
bool Align(const Matrix& factor, const Matrix& labels,
           const std::vector<std::string>& calendar,
           const std::vector<std::string>& assets, int min_assets_per_date,
           AlignedPair* out, AlignmentStats* stats, std::string* out_error);

}  // namespace ff::panel
