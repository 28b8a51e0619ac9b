#pragma once

#include <vector>

namespace ff::metrics {

// Pearson correlation over fully present vectors; degenerate inputs (length
// < 2 or zero dispersion on either side) return 0 so the IC calendar stays
// aligned across factors.
double Pearson(const std::vector<double>& x, const std::vector<double>& y);

// Average-tie ranks, 1-based.
std::vector<double> AverageTieRanks(const std::vector<double>& values);

// Spearman = Pearson of average-tie ranks.
double Spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ff::metrics
