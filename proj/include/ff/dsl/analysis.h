#pragma once

#include <optional>
#include <string>

#include "ff/dsl/ast.h"
#include "ff/dsl/registry.h"

namespace ff::dsl {

struct ComplexityProfile {
  int depth = 0;
  int node_count = 0;
  int operator_count = 0;
  int window_count = 0;
};

// Depth of a leaf is 1. Operator count covers call nodes; window count covers
// integer literals sitting at registered window positions.
ComplexityProfile MeasureComplexity(const FormulaAst& ast,
                                    const OperatorRegistry& registry);

struct CanonicalKey {
  std::string digest;  // 16 hex characters

  bool operator==(const CanonicalKey& other) const { return digest == other.digest; }
  bool operator<(const CanonicalKey& other) const { return digest < other.digest; }
};

// Normalized rendering: whitespace-free of the source, minimal parentheses,
// operands of + and * ordered by their own canonical text.
std::string CanonicalText(const FormulaAst& ast);
CanonicalKey Canonicalize(const FormulaAst& ast);

// Jaccard similarity of the two node-label multisets. Operator and variable
// nodes contribute their names, arithmetic/comparison nodes their symbol,
// and positive integer literals the bucket floor(log2(value)), so nearby
// window choices count as the same motif.
double FormulaSimilarity(const FormulaAst& a, const FormulaAst& b);

enum class Family {
  kPriceTrend,
  kMeanReversion,
  kVolatility,
  kRange,
  kLiquidityVolume,
  kPriceVolumeInteraction,
  kOther,
};

inline constexpr int kFamilyCount = 7;

const char* FamilyName(Family family);
std::optional<Family> ParseFamilyName(const std::string& name);

// All families except kOther, in declaration order. Used for coverage
// accounting and prompt text.
const std::vector<Family>& CanonicalFamilies();

// Declared label wins; otherwise a deterministic rule ladder assigns the
// family (first match): range when HIGH and LOW both appear; volatility when
// TS_STD/TS_VAR sits above a TS_LOGRET subtree; price-volume interaction when
// VOLUME and a price field co-occur; liquidity-volume when VOLUME appears
// alone; price trend when a TS_SMA anchor is compared or differenced against
// a price; mean reversion for negated short-lag returns or negated price
// z-scores; otherwise other.
Family ClassifyFamily(const FormulaAst& ast, std::optional<Family> declared);

}  // namespace ff::dsl
