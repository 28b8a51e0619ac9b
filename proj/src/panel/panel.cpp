#include "ff/panel/panel.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ff/core/hash.h"
#include "ff/core/numeric.h"

namespace ff::panel {

const char* FieldName(Field field) {
  switch (field) {
    case Field::kOpen:
      return "OPEN";
    case Field::kHigh:
      return "HIGH";
    case Field::kLow:
      return "LOW";
    case Field::kClose:
      return "CLOSE";
    case Field::kVolume:
      return "VOLUME";
    case Field::kVwap:
      return "VWAP";
  }
  return "CLOSE";
}

std::optional<Field> ParseFieldName(const std::string& name) {
  if (name == "OPEN") return Field::kOpen;
  if (name == "HIGH") return Field::kHigh;
  if (name == "LOW") return Field::kLow;
  if (name == "CLOSE") return Field::kClose;
  if (name == "VOLUME") return Field::kVolume;
  if (name == "VWAP") return Field::kVwap;
  return std::nullopt;
}

namespace {

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

double ParseCell(const std::string& token) {
  if (token.empty()) {
    return kMissing;
  }
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || !std::isfinite(value)) {
    return kMissing;
  }
  return value;
}

bool LoadUniverse(const std::string& path, std::set<std::string>* out,
                  std::string* out_error) {
  std::ifstream in(path);
  if (!in.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot open universe file: " + path;
    }
    return false;
  }
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    std::string token;
    std::stringstream ss(line);
    ss >> token;
    if (!token.empty()) {
      out->insert(token);
    }
  }
  return true;
}

struct RowValues {
  std::array<double, kFieldCount> v;
};

bool RowSane(const RowValues& row) {
  const double open = row.v[0], high = row.v[1], low = row.v[2], close = row.v[3];
  const double volume = row.v[4];
  if (IsPresent(volume) && volume < 0.0) {
    return false;
  }
  // OHLC ordering is only checkable where the prices are present.
  if (IsPresent(low) && low <= 0.0) {
    return false;
  }
  const double body_high = std::max(IsPresent(open) ? open : -1e300,
                                    IsPresent(close) ? close : -1e300);
  const double body_low = std::min(IsPresent(open) ? open : 1e300,
                                   IsPresent(close) ? close : 1e300);
  if (IsPresent(high) && body_high > -1e299 && high < body_high) {
    return false;
  }
  if (IsPresent(low) && body_low < 1e299 && low > body_low) {
    return false;
  }
  if (IsPresent(high) && IsPresent(low) && high < low) {
    return false;
  }
  return true;
}

}  // namespace

bool LoadPanel(const std::string& source_path, const PanelLoadOptions& options,
               Panel* out, PanelLoadReport* report, std::string* out_error) {
  std::ifstream in(source_path);
  if (!in.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot open panel file: " + source_path;
    }
    return false;
  }

  std::string header;
  if (!std::getline(in, header)) {
    if (out_error != nullptr) {
      *out_error = "empty panel file: " + source_path;
    }
    return false;
  }
  const std::vector<std::string> columns = SplitCsvLine(header);
  const std::vector<std::string> expected = {"date", "asset", "open", "high",
                                             "low",  "close", "volume", "vwap"};
  if (columns != expected) {
    if (out_error != nullptr) {
      *out_error = "panel file must have header date,asset,open,high,low,close,volume,vwap";
    }
    return false;
  }

  std::set<std::string> universe;
  const bool has_universe = options.universe_path.has_value();
  if (has_universe &&
      !LoadUniverse(*options.universe_path, &universe, out_error)) {
    return false;
  }

  PanelLoadReport local_report;
  std::set<std::string> dates;
  std::set<std::string> assets;
  std::map<std::pair<std::string, std::string>, RowValues> rows;

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> parts = SplitCsvLine(line);
    if (parts.size() != 8) {
      local_report.warnings.push_back("skipping malformed row: " + line);
      continue;
    }
    const std::string& date = parts[0];
    const std::string& asset = parts[1];
    local_report.rows_read += 1;
    if (!options.start_date.empty() && date < options.start_date) {
      continue;
    }
    if (!options.end_date.empty() && date > options.end_date) {
      continue;
    }
    if (has_universe && !universe.contains(asset)) {
      continue;
    }
    RowValues row;
    for (int f = 0; f < kFieldCount; ++f) {
      row.v[static_cast<std::size_t>(f)] = ParseCell(parts[static_cast<std::size_t>(f) + 2]);
    }
    if (!RowSane(row)) {
      local_report.sanity_violations += 1;
      for (double& v : row.v) {
        v = kMissing;
      }
    }
    dates.insert(date);
    assets.insert(asset);
    rows[{date, asset}] = row;
  }

  if (dates.empty()) {
    if (out_error != nullptr) {
      *out_error = "empty calendar after filtering";
    }
    return false;
  }

  Panel panel;
  panel.calendar.assign(dates.begin(), dates.end());
  panel.assets.assign(assets.begin(), assets.end());
  for (int f = 0; f < kFieldCount; ++f) {
    panel.fields[static_cast<std::size_t>(f)] =
        Matrix(panel.calendar.size(), panel.assets.size());
  }
  for (std::size_t d = 0; d < panel.calendar.size(); ++d) {
    for (std::size_t a = 0; a < panel.assets.size(); ++a) {
      auto it = rows.find({panel.calendar[d], panel.assets[a]});
      if (it == rows.end()) {
        continue;
      }
      for (int f = 0; f < kFieldCount; ++f) {
        panel.fields[static_cast<std::size_t>(f)].set(d, a, it->second.v[static_cast<std::size_t>(f)]);
      }
    }
  }

  // Valid-asset accounting: enough non-missing CLOSE over the load range.
  const Matrix& close = panel.field(Field::kClose);
  for (std::size_t a = 0; a < panel.assets.size(); ++a) {
    long present = 0;
    for (std::size_t d = 0; d < panel.calendar.size(); ++d) {
      if (IsPresent(close.at(d, a))) {
        present += 1;
      }
    }
    const double fraction =
        static_cast<double>(present) / static_cast<double>(panel.calendar.size());
    if (fraction >= options.valid_asset_close_fraction) {
      local_report.valid_assets += 1;
    }
  }

  *out = std::move(panel);
  if (report != nullptr) {
    *report = std::move(local_report);
  }
  return true;
}

bool ForwardReturns(const Panel& panel, int horizon, LabelMatrix* out,
                    std::string* out_error) {
  if (horizon < 1 || static_cast<std::size_t>(horizon) >= panel.dates()) {
    if (out_error != nullptr) {
      *out_error = "horizon out of range: " + std::to_string(horizon);
    }
    return false;
  }
  const Matrix& close = panel.field(Field::kClose);
  LabelMatrix labels;
  labels.horizon = horizon;
  labels.values = Matrix(panel.dates(), panel.asset_count());
  const std::size_t h = static_cast<std::size_t>(horizon);
  for (std::size_t d = 0; d + h < panel.dates(); ++d) {
    for (std::size_t a = 0; a < panel.asset_count(); ++a) {
      const double now = close.at(d, a);
      const double later = close.at(d + h, a);
      if (IsPresent(now) && IsPresent(later) && now != 0.0) {
        labels.values.set(d, a, MakeFinite(later / now - 1.0));
      }
    }
  }
  *out = std::move(labels);
  return true;
}

std::string PanelFingerprint(const Panel& panel) {
  std::string blob;
  for (const std::string& d : panel.calendar) {
    blob += d;
    blob.push_back('\n');
  }
  for (const std::string& a : panel.assets) {
    blob += a;
    blob.push_back('\n');
  }
  for (const Matrix& m : panel.fields) {
    for (double v : m.cells()) {
      blob += FormatNumber(v);
      blob.push_back(',');
    }
  }
  return HexDigest(Fnv1a64(blob));
}

}  // namespace ff::panel
