#include "ff/core/numeric.h"

#include <cstdio>
#include <cstdlib>

namespace ff {

std::string FormatNumber(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

double ParseNumber(const std::string& token) {
  if (token.empty() || token == "nan") {
    return std::nan("");
  }
  return std::strtod(token.c_str(), nullptr);
}

}  // namespace ff
