#pragma once

#include <cmath>
#include <string>

namespace ff {

// Serialization format for every number written into artifacts and reports:
// 12 significant digits, C locale. Keeps regenerated files byte-stable.
std::string FormatNumber(double value);

// Parses a FormatNumber-produced token; empty or "nan" maps to missing.
double ParseNumber(const std::string& token);

// Coerces non-finite values (inf after a kernel, for instance) to missing.
inline double MakeFinite(double x) {
  return std::isfinite(x) ? x : std::nan("");
}

}  // namespace ff
