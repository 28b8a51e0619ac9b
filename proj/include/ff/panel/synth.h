#pragma once

#include <string>

#include "ff/panel/panel.h"

namespace ff::panel {

// Synthetic daily panel: geometric random-walk closes with consistent OHLC
// envelopes and log-normal volume. Forward one-day returns carry a planted
// cross-sectional signal: the return of asset i from t to t+1 is
// return_scale * (beta * zscore(CLOSE_t) + noise_sigma * eps), so the CLOSE
// level itself predicts next-day returns with per-date Pearson correlation
// beta / sqrt(beta^2 + noise_sigma^2).
struct SynthSpec {
  int assets = 50;
  int dates = 300;
  double planted_beta = 0.05;
  double noise_sigma = 1.0;
  double return_scale = 0.01;
  std::string start_date = "2022-01-03";  // calendar walks forward over weekdays
  std::uint64_t seed = 1;
};

bool SynthPanel(const SynthSpec& spec, Panel* out, std::string* out_error);

// Writes the panel in the loadable CSV schema.
bool WritePanelCsv(const Panel& panel, const std::string& path,
                   std::string* out_error);

}  // namespace ff::panel
