#include "ff/panel/synth.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "ff/core/numeric.h"
#include "ff/core/rng.h"

namespace ff::panel {

namespace {

struct Date {
  int year;
  int month;
  int day;
};

bool IsLeap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int DaysInMonth(int year, int month) {
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && IsLeap(year)) {
    return 29;
  }
  return kDays[month - 1];
}

void NextDay(Date* d) {
  d->day += 1;
  if (d->day > DaysInMonth(d->year, d->month)) {
    d->day = 1;
    d->month += 1;
    if (d->month > 12) {
      d->month = 1;
      d->year += 1;
    }
  }
}

// Sakamoto's method; 0 = Sunday.
int DayOfWeek(const Date& d) {
  static const int kOffsets[] = {0, 3, 2, 5, 0, 3, 5, 1, 4, 6, 2, 4};
  int y = d.year;
  if (d.month < 3) {
    y -= 1;
  }
  return (y + y / 4 - y / 100 + y / 400 + kOffsets[d.month - 1] + d.day) % 7;
}

std::string FormatDate(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

std::vector<std::string> WeekdayCalendar(const std::string& start, int count) {
  Date d{2022, 1, 3};
  std::sscanf(start.c_str(), "%d-%d-%d", &d.year, &d.month, &d.day);
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const int dow = DayOfWeek(d);
    if (dow != 0 && dow != 6) {
      out.push_back(FormatDate(d));
    }
    NextDay(&d);
  }
  return out;
}

}  // namespace

bool SynthPanel(const SynthSpec& spec, Panel* out, std::string* out_error) {
  if (spec.assets < 1 || spec.dates < 2) {
    if (out_error != nullptr) {
      *out_error = "synthetic panel needs at least 1 asset and 2 dates";
    }
    return false;
  }

  const std::size_t n_assets = static_cast<std::size_t>(spec.assets);
  const std::size_t n_dates = static_cast<std::size_t>(spec.dates);

  Panel panel;
  panel.calendar = WeekdayCalendar(spec.start_date, spec.dates);
  panel.assets.reserve(n_assets);
  for (std::size_t a = 0; a < n_assets; ++a) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "SYN%04zu", a);
    panel.assets.push_back(buf);
  }
  for (auto& m : panel.fields) {
    m = Matrix(n_dates, n_assets);
  }

  Rng rng(DeriveSeed(spec.seed, 0x53594E5448ULL));

  // Initial closes dispersed across assets so the cross-section has spread.
  std::vector<double> close(n_assets);
  for (std::size_t a = 0; a < n_assets; ++a) {
    close[a] = 50.0 * std::exp(0.5 * rng.Normal());
  }

  std::vector<double> prev_close = close;
  for (std::size_t d = 0; d < n_dates; ++d) {
    // Cross-sectional z-score of the close level is the hidden signal.
    double mean = 0.0;
    for (double c : close) {
      mean += c;
    }
    mean /= static_cast<double>(n_assets);
    double var = 0.0;
    for (double c : close) {
      var += (c - mean) * (c - mean);
    }
    const double stddev =
        n_assets > 1 ? std::sqrt(var / static_cast<double>(n_assets - 1)) : 0.0;

    for (std::size_t a = 0; a < n_assets; ++a) {
      const double c = close[a];
      const double open = prev_close[a] * std::exp(0.002 * rng.Normal());
      const double body_high = std::max(open, c);
      const double body_low = std::min(open, c);
      const double high = body_high * std::exp(0.003 * std::fabs(rng.Normal()));
      const double low = body_low * std::exp(-0.003 * std::fabs(rng.Normal()));
      const double volume = 1.0e6 * std::exp(0.4 * rng.Normal());
      const double vwap = low + rng.Uniform01() * (high - low);

      panel.field(Field::kOpen).set(d, a, open);
      panel.field(Field::kHigh).set(d, a, high);
      panel.field(Field::kLow).set(d, a, low);
      panel.field(Field::kClose).set(d, a, c);
      panel.field(Field::kVolume).set(d, a, volume);
      panel.field(Field::kVwap).set(d, a, vwap);
    }

    prev_close = close;
    for (std::size_t a = 0; a < n_assets; ++a) {
      const double z = stddev > 0.0 ? (close[a] - mean) / stddev : 0.0;
      const double shock = spec.return_scale *
                           (spec.planted_beta * z + spec.noise_sigma * rng.Normal());
      close[a] = close[a] * std::exp(shock);
    }
  }

  *out = std::move(panel);
  return true;
}

bool WritePanelCsv(const Panel& panel, const std::string& path,
                   std::string* out_error) {
  std::ofstream out(path);
  if (!out.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot write panel file: " + path;
    }
    return false;
  }
  out << "date,asset,open,high,low,close,volume,vwap\n";
  for (std::size_t d = 0; d < panel.dates(); ++d) {
    for (std::size_t a = 0; a < panel.asset_count(); ++a) {
      out << panel.calendar[d] << ',' << panel.assets[a];
      for (const auto& m : panel.fields) {
        const double v = m.at(d, a);
        out << ',';
        if (IsPresent(v)) {
          out << FormatNumber(v);
        }
      }
      out << '\n';
    }
  }
  out.flush();
  if (!out.good()) {
    if (out_error != nullptr) {
      *out_error = "write failure: " + path;
    }
    return false;
  }
  return true;
}

}  // namespace ff::panel
