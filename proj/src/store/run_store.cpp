#include "ff/store/run_store.h"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "ff/core/numeric.h"
#include "ff/core/rng.h"

namespace ff::store {

namespace fs = std::filesystem;

void PutNumber(nlohmann::json& obj, const std::string& key, double value) {
  obj[key] = FormatNumber(value);
}

double GetNumber(const nlohmann::json& obj, const std::string& key) {
  if (!obj.contains(key)) {
    return kMissing;
  }
  if (obj[key].is_string()) {
    return ParseNumber(obj[key].get<std::string>());
  }
  if (obj[key].is_number()) {
    return obj[key].get<double>();
  }
  return kMissing;
}

namespace {

nlohmann::json NumberArray(const std::vector<double>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (double v : values) {
    arr.push_back(FormatNumber(v));
  }
  return arr;
}

std::vector<double> NumbersFrom(const nlohmann::json& arr) {
  std::vector<double> out;
  for (const auto& v : arr) {
    out.push_back(v.is_string() ? ParseNumber(v.get<std::string>())
                                : v.get<double>());
  }
  return out;
}

nlohmann::json IcSeriesToJson(const metrics::IcSeries& series) {
  nlohmann::json doc;
  doc["kind"] = series.kind == metrics::CorrelationKind::kSpearman ? "spearman"
                                                                   : "pearson";
  doc["dates"] = series.dates;
  doc["values"] = NumberArray(series.values);
  return doc;
}

metrics::IcSeries IcSeriesFromJson(const nlohmann::json& doc) {
  metrics::IcSeries series;
  series.kind = doc.value("kind", "spearman") == "pearson"
                    ? metrics::CorrelationKind::kPearson
                    : metrics::CorrelationKind::kSpearman;
  series.dates = doc.value("dates", std::vector<std::string>{});
  series.values = NumbersFrom(doc.value("values", nlohmann::json::array()));
  return series;
}

nlohmann::json IcAggregateToJson(const metrics::IcAggregate& agg) {
  nlohmann::json doc;
  PutNumber(doc, "mean", agg.mean);
  PutNumber(doc, "std", agg.std_dev);
  PutNumber(doc, "daily_ir", agg.daily_ir);
  PutNumber(doc, "annualized_ir", agg.annualized_ir);
  return doc;
}

metrics::IcAggregate IcAggregateFromJson(const nlohmann::json& doc) {
  metrics::IcAggregate agg;
  agg.mean = GetNumber(doc, "mean");
  agg.std_dev = GetNumber(doc, "std");
  agg.daily_ir = GetNumber(doc, "daily_ir");
  agg.annualized_ir = GetNumber(doc, "annualized_ir");
  return agg;
}

nlohmann::json HacToJson(const metrics::HacTest& test) {
  nlohmann::json doc;
  doc["valid"] = test.valid;
  doc["lag"] = test.lag;
  PutNumber(doc, "mean", test.mean);
  PutNumber(doc, "std_error", test.std_error);
  PutNumber(doc, "t_stat", test.t_stat);
  PutNumber(doc, "p_value", test.p_value);
  return doc;
}

metrics::HacTest HacFromJson(const nlohmann::json& doc) {
  metrics::HacTest test;
  test.valid = doc.value("valid", false);
  test.lag = doc.value("lag", 0);
  test.mean = GetNumber(doc, "mean");
  test.std_error = GetNumber(doc, "std_error");
  test.t_stat = GetNumber(doc, "t_stat");
  test.p_value = GetNumber(doc, "p_value");
  return test;
}

std::string NowTimestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string RunIdTimestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%d-%H%M%S", &tm);
  return buf;
}

std::string RandomSuffix() {
  const auto ticks = static_cast<std::uint64_t>(
      std::chrono::steady_clock::now().time_since_epoch().count());
  Rng rng(DeriveSeed(ticks, 0x52554E4944ULL));
  static const char* kAlphabet = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::string out;
  for (int i = 0; i < 6; ++i) {
    out.push_back(kAlphabet[rng.UniformInt(0, 35)]);
  }
  return out;
}

}  // namespace

nlohmann::json EvalReportToJson(const metrics::EvalReport& report) {
  nlohmann::json doc;

  nlohmann::json alignment;
  PutNumber(alignment, "coverage", report.alignment.coverage);
  PutNumber(alignment, "drop_ratio", report.alignment.drop_ratio);
  alignment["valid_cells"] = report.alignment.valid_cells;
  alignment["valid_dates"] = report.alignment.valid_dates;
  doc["alignment"] = alignment;

  doc["rank_ic"] = IcSeriesToJson(report.rank_ic);
  doc["ic"] = IcSeriesToJson(report.ic);
  doc["rank_ic_agg"] = IcAggregateToJson(report.rank_ic_agg);
  doc["ic_agg"] = IcAggregateToJson(report.ic_agg);

  nlohmann::json buckets;
  buckets["bucket_count"] = report.buckets.bucket_count;
  buckets["bucket_means"] = NumberArray(report.buckets.bucket_means);
  buckets["dates"] = report.buckets.dates;
  buckets["long_short"] = NumberArray(report.buckets.long_short);
  PutNumber(buckets, "long_short_mean", report.buckets.long_short_mean);
  doc["buckets"] = buckets;

  nlohmann::json turnover;
  PutNumber(turnover, "top_decile", report.turnover.top_decile);
  PutNumber(turnover, "rank", report.turnover.rank);
  doc["turnover"] = turnover;

  doc["rank_ic_hac"] = HacToJson(report.rank_ic_hac);
  doc["ic_hac"] = HacToJson(report.ic_hac);
  doc["long_short_hac"] = HacToJson(report.long_short_hac);

  nlohmann::json complexity;
  complexity["depth"] = report.complexity.depth;
  complexity["node_count"] = report.complexity.node_count;
  complexity["operator_count"] = report.complexity.operator_count;
  complexity["window_count"] = report.complexity.window_count;
  doc["complexity"] = complexity;

  return doc;
}

bool EvalReportFromJson(const nlohmann::json& doc, metrics::EvalReport* out,
                        std::string* out_error) {
  try {
    metrics::EvalReport report;
    const auto& alignment = doc.at("alignment");
    report.alignment.coverage = GetNumber(alignment, "coverage");
    report.alignment.drop_ratio = GetNumber(alignment, "drop_ratio");
    report.alignment.valid_cells = alignment.value("valid_cells", 0L);
    report.alignment.valid_dates = alignment.value("valid_dates", 0L);

    report.rank_ic = IcSeriesFromJson(doc.at("rank_ic"));
    report.ic = IcSeriesFromJson(doc.at("ic"));
    report.rank_ic_agg = IcAggregateFromJson(doc.at("rank_ic_agg"));
    report.ic_agg = IcAggregateFromJson(doc.at("ic_agg"));

    const auto& buckets = doc.at("buckets");
    report.buckets.bucket_count = buckets.value("bucket_count", 0);
    report.buckets.bucket_means = NumbersFrom(buckets.at("bucket_means"));
    report.buckets.dates = buckets.value("dates", std::vector<std::string>{});
    report.buckets.long_short = NumbersFrom(buckets.at("long_short"));
    report.buckets.long_short_mean = GetNumber(buckets, "long_short_mean");

    const auto& turnover = doc.at("turnover");
    report.turnover.top_decile = GetNumber(turnover, "top_decile");
    report.turnover.rank = GetNumber(turnover, "rank");

    report.rank_ic_hac = HacFromJson(doc.at("rank_ic_hac"));
    report.ic_hac = HacFromJson(doc.at("ic_hac"));
    report.long_short_hac = HacFromJson(doc.at("long_short_hac"));

    const auto& complexity = doc.at("complexity");
    report.complexity.depth = complexity.value("depth", 0);
    report.complexity.node_count = complexity.value("node_count", 0);
    report.complexity.operator_count = complexity.value("operator_count", 0);
    report.complexity.window_count = complexity.value("window_count", 0);

    *out = std::move(report);
    return true;
  } catch (const nlohmann::json::exception& e) {
    if (out_error != nullptr) {
      *out_error = std::string("malformed evaluation report: ") + e.what();
    }
    return false;
  }
}

nlohmann::json FactorArtifactToJson(const FactorArtifact& artifact) {
  nlohmann::json doc;
  doc["formula"] = artifact.formula;
  doc["canonical_key"] = artifact.canonical_key;
  doc["family"] = artifact.family;
  doc["report"] = EvalReportToJson(artifact.report);
  nlohmann::json score;
  PutNumber(score, "base", artifact.score.base);
  PutNumber(score, "crowding_penalty", artifact.score.crowding_penalty);
  PutNumber(score, "similarity_penalty", artifact.score.similarity_penalty);
  PutNumber(score, "family_penalty", artifact.score.family_penalty);
  PutNumber(score, "novelty_bonus", artifact.score.novelty_bonus);
  doc["score"] = score;
  return doc;
}

bool FactorArtifactFromJson(const nlohmann::json& doc, FactorArtifact* out,
                            std::string* out_error) {
  try {
    FactorArtifact artifact;
    artifact.formula = doc.at("formula").get<std::string>();
    artifact.canonical_key = doc.at("canonical_key").get<std::string>();
    artifact.family = doc.at("family").get<std::string>();
    if (!EvalReportFromJson(doc.at("report"), &artifact.report, out_error)) {
      return false;
    }
    const auto& score = doc.at("score");
    artifact.score.base = GetNumber(score, "base");
    artifact.score.crowding_penalty = GetNumber(score, "crowding_penalty");
    artifact.score.similarity_penalty = GetNumber(score, "similarity_penalty");
    artifact.score.family_penalty = GetNumber(score, "family_penalty");
    artifact.score.novelty_bonus = GetNumber(score, "novelty_bonus");
    *out = std::move(artifact);
    return true;
  } catch (const nlohmann::json::exception& e) {
    if (out_error != nullptr) {
      *out_error = std::string("malformed factor artifact: ") + e.what();
    }
    return false;
  }
}

bool RunWriter::Init(const std::string& output_root, const InitInfo& info,
                     RunWriter* out, std::string* out_error) {
  std::error_code ec;
  fs::create_directories(output_root, ec);
  if (ec) {
    if (out_error != nullptr) {
      *out_error = "cannot create output root " + output_root + ": " + ec.message();
    }
    return false;
  }

  fs::path run_dir;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const std::string run_id = RunIdTimestamp() + "-" + RandomSuffix();
    run_dir = fs::path(output_root) / run_id;
    if (!fs::exists(run_dir)) {
      break;
    }
    run_dir.clear();
  }
  if (run_dir.empty()) {
    if (out_error != nullptr) {
      *out_error = "could not allocate a unique run id under " + output_root;
    }
    return false;
  }

  fs::create_directories(run_dir, ec);
  fs::create_directories(run_dir / "rounds", ec);
  fs::create_directories(run_dir / "prompts", ec);
  fs::create_directories(run_dir / "factors", ec);
  fs::create_directories(run_dir / "reports", ec);
  if (ec) {
    if (out_error != nullptr) {
      *out_error = "cannot create run directory: " + ec.message();
    }
    return false;
  }

  nlohmann::json manifest;
  manifest["run_id"] = run_dir.filename().string();
  manifest["created_at"] = NowTimestamp();
  manifest["config"] = info.config;
  manifest["panel_fingerprint"] = info.panel_fingerprint;
  manifest["panel_first_date"] = info.panel_first_date;
  manifest["panel_last_date"] = info.panel_last_date;
  manifest["seed"] = info.seed;
  manifest["code_version"] = "factor-forge 0.1.0";
  if (!WriteJsonFile((run_dir / "manifest.json").string(), manifest, out_error)) {
    return false;
  }

  // Touch the records file so the layout is complete before any processing.
  {
    std::ofstream records(run_dir / "records.jsonl", std::ios::app);
    if (!records.is_open()) {
      if (out_error != nullptr) {
        *out_error = "cannot create records file in " + run_dir.string();
      }
      return false;
    }
  }

  out->dir_ = run_dir.string();
  out->record_count_ = 0;
  return true;
}

bool RunWriter::Open(const std::string& run_dir, RunWriter* out,
                     std::string* out_error) {
  if (!fs::exists(fs::path(run_dir) / "manifest.json")) {
    if (out_error != nullptr) {
      *out_error = "not a run directory (missing manifest): " + run_dir;
    }
    return false;
  }
  long count = 0;
  std::ifstream records(fs::path(run_dir) / "records.jsonl");
  std::string line;
  while (std::getline(records, line)) {
    if (!line.empty()) {
      count += 1;
    }
  }
  out->dir_ = run_dir;
  out->record_count_ = count;
  return true;
}

bool RunWriter::AppendRecord(const nlohmann::json& record, long* position,
                             std::string* out_error) {
  std::ofstream out(fs::path(dir_) / "records.jsonl", std::ios::app);
  if (!out.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot open records file for append";
    }
    return false;
  }
  out << record.dump() << '\n';
  out.flush();
  if (!out.good()) {
    if (out_error != nullptr) {
      *out_error = "record append failed";
    }
    return false;
  }
  record_count_ += 1;
  if (position != nullptr) {
    *position = record_count_;
  }
  return true;
}

bool RunWriter::WriteFactorArtifact(const FactorArtifact& artifact,
                                    std::string* out_error) {
  const fs::path path =
      fs::path(dir_) / "factors" / (artifact.canonical_key + ".json");
  if (fs::exists(path)) {
    if (out_error != nullptr) {
      *out_error = "internal consistency error: artifact already exists for key " +
                   artifact.canonical_key;
    }
    return false;
  }
  return WriteJsonFile(path.string(), FactorArtifactToJson(artifact), out_error);
}

bool RunWriter::WriteRoundFile(int round, const nlohmann::json& doc,
                               std::string* out_error) {
  const fs::path path =
      fs::path(dir_) / "rounds" / ("round-" + std::to_string(round) + ".json");
  return WriteJsonFile(path.string(), doc, out_error);
}

bool RunWriter::WritePromptSnapshot(int round, const std::string& batch,
                                    const nlohmann::json& doc,
                                    std::string* out_error) {
  const fs::path path =
      fs::path(dir_) / "prompts" /
      ("round-" + std::to_string(round) + "-" + batch + ".json");
  return WriteJsonFile(path.string(), doc, out_error);
}

bool RunWriter::WriteCheckpoint(const nlohmann::json& doc,
                                std::string* out_error) {
  const fs::path final_path = fs::path(dir_) / "checkpoint.json";
  const fs::path tmp_path = fs::path(dir_) / "checkpoint.json.tmp";
  if (!WriteJsonFile(tmp_path.string(), doc, out_error)) {
    return false;
  }
  std::error_code ec;
  fs::rename(tmp_path, final_path, ec);
  if (ec) {
    if (out_error != nullptr) {
      *out_error = "checkpoint rename failed: " + ec.message();
    }
    return false;
  }
  return true;
}

bool RunWriter::WriteSelection(const nlohmann::json& doc,
                               std::string* out_error) {
  return WriteJsonFile((fs::path(dir_) / "selection.json").string(), doc,
                       out_error);
}

bool RunWriter::ReadManifest(nlohmann::json* out, std::string* out_error) const {
  return ReadJsonFile((fs::path(dir_) / "manifest.json").string(), out, out_error);
}

bool RunWriter::ReadCheckpoint(nlohmann::json* out, std::string* out_error) const {
  return ReadJsonFile((fs::path(dir_) / "checkpoint.json").string(), out, out_error);
}

bool ReadRecords(const std::string& run_dir, std::vector<nlohmann::json>* out,
                 std::string* out_error) {
  std::ifstream in(fs::path(run_dir) / "records.jsonl");
  if (!in.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot open records file in " + run_dir;
    }
    return false;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded()) {
      break;  // torn tail from a crash; the complete prefix stands
    }
    out->push_back(std::move(record));
  }
  return true;
}

bool ReadJsonFile(const std::string& path, nlohmann::json* out,
                  std::string* out_error) {
  std::ifstream in(path);
  if (!in.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot open " + path;
    }
    return false;
  }
  try {
    in >> *out;
  } catch (const nlohmann::json::exception& e) {
    if (out_error != nullptr) {
      *out_error = "malformed JSON in " + path + ": " + e.what();
    }
    return false;
  }
  return true;
}

bool WriteJsonFile(const std::string& path, const nlohmann::json& doc,
                   std::string* out_error) {
  std::ofstream out(path);
  if (!out.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot write " + path;
    }
    return false;
  }
  out << doc.dump(2) << '\n';
  out.flush();
  if (!out.good()) {
    if (out_error != nullptr) {
      *out_error = "write failure: " + path;
    }
    return false;
  }
  return true;
}

}  // namespace ff::store
