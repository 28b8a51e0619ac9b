#include "ff/mining/mock_generator.h"

#include <array>
#include <string>

#include "ff/core/rng.h"

namespace ff::mining {

namespace {

struct Template {
  dsl::Family family;
  // Placeholders: {w} window, {l} short lag.
  const char* pattern;
};

const std::array<Template, 20> kTemplates = {{
    {dsl::Family::kPriceTrend, "TS_SMA(CLOSE, {w}) - CLOSE"},
    {dsl::Family::kPriceTrend, "CLOSE / TS_SMA(CLOSE, {w})"},
    {dsl::Family::kPriceTrend, "CS_RANK(CLOSE - TS_SMA(CLOSE, {w}))"},
    {dsl::Family::kPriceTrend, "TS_SMA(VWAP, {w}) - VWAP"},
    {dsl::Family::kMeanReversion, "-TS_LOGRET(CLOSE, {l})"},
    {dsl::Family::kMeanReversion, "-CS_ZSCORE(CLOSE)"},
    {dsl::Family::kMeanReversion, "CS_RANK(-TS_LOGRET(CLOSE, {l}))"},
    {dsl::Family::kVolatility, "TS_STD(TS_LOGRET(CLOSE, 1), {w})"},
    {dsl::Family::kVolatility, "TS_VAR(TS_LOGRET(CLOSE, 1), {w})"},
    {dsl::Family::kVolatility, "CS_RANK(TS_STD(TS_LOGRET(CLOSE, 1), {w}))"},
    {dsl::Family::kRange, "(HIGH - LOW) / CLOSE"},
    {dsl::Family::kRange, "TS_SMA((HIGH - LOW) / CLOSE, {w})"},
    {dsl::Family::kRange, "CS_RANK((HIGH - LOW) / CLOSE)"},
    {dsl::Family::kRange, "CS_ZSCORE(TS_SMA((HIGH - LOW) / CLOSE, {w}))"},
    {dsl::Family::kLiquidityVolume, "VOLUME / TS_SMA(VOLUME, {w})"},
    {dsl::Family::kLiquidityVolume, "TS_LOGRET(VOLUME, {l})"},
    {dsl::Family::kLiquidityVolume, "CS_RANK(VOLUME)"},
    {dsl::Family::kPriceVolumeInteraction, "CS_RANK(VOLUME * TS_LOGRET(CLOSE, 1))"},
    {dsl::Family::kPriceVolumeInteraction, "CS_ZSCORE(VOLUME) * TS_LOGRET(CLOSE, 1)"},
    {dsl::Family::kPriceVolumeInteraction, "IF(CLOSE > OPEN, VOLUME, -VOLUME)"},
}};

const std::array<const char*, 6> kMalformed = {{
    "TS_SMA(CLOSE",
    "CLOSE +",
    "(((HIGH)",
    ")",
    "TS_SMA(CLOSE,)",
    "0x nonsense ##",
}};

const std::array<int, 4> kWindows = {{5, 10, 20, 60}};
const std::array<int, 4> kLags = {{1, 2, 3, 5}};

std::string Instantiate(const char* pattern, Rng* rng) {
  std::string out;
  for (const char* p = pattern; *p != '\0'; ++p) {
    if (*p == '{' && *(p + 1) != '\0' && *(p + 2) == '}') {
      const char kind = *(p + 1);
      if (kind == 'w') {
        out += std::to_string(kWindows[static_cast<std::size_t>(rng->UniformInt(0, 3))]);
        p += 2;
        continue;
      }
      if (kind == 'l') {
        out += std::to_string(kLags[static_cast<std::size_t>(rng->UniformInt(0, 3))]);
        p += 2;
        continue;
      }
    }
    out.push_back(*p);
  }
  return out;
}

bool IsUnderExplored(const PromptBundle& bundle, dsl::Family family) {
  const std::string name = dsl::FamilyName(family);
  for (const std::string& entry : bundle.under_explored) {
    if (entry == name) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool MockGenerator::Generate(const PromptBundle& bundle, GenerationResult* out,
                             std::string* out_error) {
  (void)out_error;
  // Stream identity: (seed, round, batch kind). Two calls with the same
  // bundle produce the same batch.
  const std::uint64_t stream =
      static_cast<std::uint64_t>(bundle.round_index) * 2 +
      (bundle.batch_kind == "feedback" ? 1 : 0);
  Rng rng(DeriveSeed(seed_, stream));

  // Sampling weights favor families named under-explored in the feedback.
  std::array<double, kTemplates.size()> weights;
  double total = 0.0;
  for (std::size_t i = 0; i < kTemplates.size(); ++i) {
    weights[i] = IsUnderExplored(bundle, kTemplates[i].family) ? 3.0 : 1.0;
    total += weights[i];
  }

  GenerationResult result;
  result.model_id = "mock";
  for (int i = 0; i < bundle.batch_size; ++i) {
    if (rng.Uniform01() < malformed_rate_) {
      result.candidates.push_back(
          {kMalformed[static_cast<std::size_t>(rng.UniformInt(0, 5))], std::nullopt});
      continue;
    }
    if (!result.candidates.empty() && rng.Uniform01() < duplicate_rate_) {
      const auto pick = static_cast<std::size_t>(rng.UniformInt(
          0, static_cast<std::int64_t>(result.candidates.size()) - 1));
      result.candidates.push_back(result.candidates[pick]);
      continue;
    }
    double roll = rng.Uniform01() * total;
    std::size_t chosen = 0;
    for (std::size_t t = 0; t < kTemplates.size(); ++t) {
      roll -= weights[t];
      if (roll <= 0.0) {
        chosen = t;
        break;
      }
    }
    GeneratedCandidate candidate;
    candidate.text = Instantiate(kTemplates[chosen].pattern, &rng);
    if (rng.Uniform01() < 0.7) {
      candidate.declared_family = kTemplates[chosen].family;
    }
    result.candidates.push_back(std::move(candidate));
  }

  nlohmann::json snapshot;
  snapshot["generator"] = "mock";
  snapshot["stream"] = stream;
  nlohmann::json lines = nlohmann::json::array();
  for (const GeneratedCandidate& candidate : result.candidates) {
    lines.push_back(candidate.text);
  }
  snapshot["candidates"] = lines;
  result.response_snapshot = snapshot;
  result.request_snapshot = bundle.ToJson();

  *out = std::move(result);
  return true;
}

}  // namespace ff::mining
