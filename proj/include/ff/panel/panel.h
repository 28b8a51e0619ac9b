#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ff/core/matrix.h"

namespace ff::panel {

enum class Field { kOpen, kHigh, kLow, kClose, kVolume, kVwap };

inline constexpr int kFieldCount = 6;
const char* FieldName(Field field);
std::optional<Field> ParseFieldName(const std::string& name);

// Immutable daily panel: a strictly increasing trading calendar, unique
// sorted asset identifiers, and one date x asset matrix per field.
struct Panel {
  std::vector<std::string> calendar;
  std::vector<std::string> assets;
  std::array<Matrix, kFieldCount> fields;

  const Matrix& field(Field f) const { return fields[static_cast<int>(f)]; }
  Matrix& field(Field f) { return fields[static_cast<int>(f)]; }
  std::size_t dates() const { return calendar.size(); }
  std::size_t asset_count() const { return assets.size(); }
};

struct PanelLoadOptions {
  std::optional<std::string> universe_path;
  std::string start_date;  // inclusive, ISO-8601; empty = unbounded
  std::string end_date;    // inclusive
  double valid_asset_close_fraction = 0.8;
};

struct PanelLoadReport {
  long rows_read = 0;
  long sanity_violations = 0;  // rows dropped for broken OHLC ordering
  long valid_assets = 0;       // assets with enough non-missing CLOSE
  std::vector<std::string> warnings;
};

// CSV schema: header date,asset,open,high,low,close,volume,vwap; missing
// cells empty. Rows violating HIGH >= max(OPEN, CLOSE), LOW <= min(OPEN,
// CLOSE), LOW > 0 or VOLUME >= 0 are set fully missing and counted.
bool LoadPanel(const std::string& source_path, const PanelLoadOptions& options,
               Panel* out, PanelLoadReport* report, std::string* out_error);

struct LabelMatrix {
  int horizon = 1;
  Matrix values;  // forward simple returns; last `horizon` rows all missing
};

// value(t, i) = CLOSE(t + horizon, i) / CLOSE(t, i) - 1 where both closes
// are present, else missing.
bool ForwardReturns(const Panel& panel, int horizon, LabelMatrix* out,
                    std::string* out_error);

// Content digest of the loaded data, recorded in run manifests.
std::string PanelFingerprint(const Panel& panel);

}  // namespace ff::panel
