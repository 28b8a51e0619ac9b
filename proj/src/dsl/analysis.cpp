#include "ff/dsl/analysis.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "ff/core/hash.h"
#include "ff/core/numeric.h"

namespace ff::dsl {

namespace {

void WalkComplexity(const AstNode& node, const OperatorRegistry& registry,
                    int depth, ComplexityProfile* profile) {
  profile->node_count += 1;
  profile->depth = std::max(profile->depth, depth);
  if (node.kind == NodeKind::kCall) {
    profile->operator_count += 1;
    const OperatorSpec* spec = registry.Find(node.name);
    if (spec != nullptr) {
      for (int pos : spec->window_positions) {
        if (pos < static_cast<int>(node.children.size()) &&
            node.children[pos].kind == NodeKind::kLiteral &&
            node.children[pos].is_integer) {
          profile->window_count += 1;
        }
      }
    }
  }
  for (const AstNode& child : node.children) {
    WalkComplexity(child, registry, depth + 1, profile);
  }
}

AstNode CanonicalizeNode(const AstNode& node) {
  AstNode out = node;
  out.children.clear();
  out.children.reserve(node.children.size());
  for (const AstNode& child : node.children) {
    out.children.push_back(CanonicalizeNode(child));
  }
  if (out.kind == NodeKind::kBinary && (out.name == "+" || out.name == "*")) {
    const std::string left = Render(out.children[0]);
    const std::string right = Render(out.children[1]);
    if (right < left) {
      std::swap(out.children[0], out.children[1]);
    }
  }
  return out;
}

void CollectLabels(const AstNode& node, std::map<std::string, int>* labels) {
  switch (node.kind) {
    case NodeKind::kCall:
    case NodeKind::kVariable:
      (*labels)[node.name] += 1;
      break;
    case NodeKind::kBinary:
    case NodeKind::kCompare:
      (*labels)[node.name] += 1;
      break;
    case NodeKind::kUnaryNeg:
      (*labels)["neg"] += 1;
      break;
    case NodeKind::kConditional:
      (*labels)["IF"] += 1;
      break;
    case NodeKind::kLiteral: {
      if (node.is_integer && node.value >= 1.0) {
        const int bucket =
            static_cast<int>(std::floor(std::log2(node.value)));
        (*labels)["win:" + std::to_string(bucket)] += 1;
      } else {
        (*labels)["num:" + FormatNumber(node.value)] += 1;
      }
      break;
    }
    default:
      (*labels)[NodeKindName(node.kind)] += 1;
      break;
  }
  for (const AstNode& child : node.children) {
    CollectLabels(child, labels);
  }
}

bool ContainsVariable(const AstNode& node, const std::string& name) {
  if (node.kind == NodeKind::kVariable && node.name == name) {
    return true;
  }
  for (const AstNode& child : node.children) {
    if (ContainsVariable(child, name)) {
      return true;
    }
  }
  return false;
}

bool ContainsCall(const AstNode& node, const std::string& op) {
  if (node.kind == NodeKind::kCall && node.name == op) {
    return true;
  }
  for (const AstNode& child : node.children) {
    if (ContainsCall(child, op)) {
      return true;
    }
  }
  return false;
}

bool IsPriceField(const std::string& name) {
  return name == "OPEN" || name == "HIGH" || name == "LOW" || name == "CLOSE" ||
         name == "VWAP";
}

bool ContainsPriceField(const AstNode& node) {
  if (node.kind == NodeKind::kVariable && IsPriceField(node.name)) {
    return true;
  }
  for (const AstNode& child : node.children) {
    if (ContainsPriceField(child)) {
      return true;
    }
  }
  return false;
}

// TS_STD or TS_VAR whose data argument contains a TS_LOGRET subtree.
bool HasDispersionOverReturns(const AstNode& node) {
  if (node.kind == NodeKind::kCall &&
      (node.name == "TS_STD" || node.name == "TS_VAR") &&
      !node.children.empty() && ContainsCall(node.children[0], "TS_LOGRET")) {
    return true;
  }
  for (const AstNode& child : node.children) {
    if (HasDispersionOverReturns(child)) {
      return true;
    }
  }
  return false;
}

// A comparison, difference, or ratio with a TS_SMA subtree on one side and a
// bare price field reachable on the other.
bool HasTrendAnchor(const AstNode& node) {
  const bool is_anchor_shape =
      node.kind == NodeKind::kCompare ||
      (node.kind == NodeKind::kBinary && (node.name == "-" || node.name == "/"));
  if (is_anchor_shape && node.children.size() == 2) {
    const AstNode& lhs = node.children[0];
    const AstNode& rhs = node.children[1];
    const bool lhs_sma = ContainsCall(lhs, "TS_SMA");
    const bool rhs_sma = ContainsCall(rhs, "TS_SMA");
    if ((lhs_sma && ContainsPriceField(rhs)) ||
        (rhs_sma && ContainsPriceField(lhs))) {
      return true;
    }
  }
  for (const AstNode& child : node.children) {
    if (HasTrendAnchor(child)) {
      return true;
    }
  }
  return false;
}

inline constexpr long long kShortReversalLag = 5;

bool IsShortLagReturn(const AstNode& node) {
  if (node.kind != NodeKind::kCall || node.name != "TS_LOGRET" ||
      node.children.size() != 2) {
    return false;
  }
  const AstNode& lag = node.children[1];
  return lag.kind == NodeKind::kLiteral && lag.is_integer &&
         static_cast<long long>(lag.value) <= kShortReversalLag;
}

bool IsPriceZscore(const AstNode& node) {
  return node.kind == NodeKind::kCall && node.name == "CS_ZSCORE" &&
         !node.children.empty() && ContainsPriceField(node.children[0]);
}

bool HasReversalNegation(const AstNode& node) {
  if (node.kind == NodeKind::kUnaryNeg && !node.children.empty()) {
    const AstNode& inner = node.children[0];
    if (IsShortLagReturn(inner) || IsPriceZscore(inner)) {
      return true;
    }
    // Allow one rank/zscore wrapper between the negation and the motif.
    if (inner.kind == NodeKind::kCall && !inner.children.empty() &&
        (IsShortLagReturn(inner.children[0]) || IsPriceZscore(inner.children[0]))) {
      return true;
    }
  }
  for (const AstNode& child : node.children) {
    if (HasReversalNegation(child)) {
      return true;
    }
  }
  return false;
}

}  // namespace

ComplexityProfile MeasureComplexity(const FormulaAst& ast,
                                    const OperatorRegistry& registry) {
  ComplexityProfile profile;
  WalkComplexity(ast.root, registry, 1, &profile);
  return profile;
}

std::string CanonicalText(const FormulaAst& ast) {
  return Render(CanonicalizeNode(ast.root));
}

CanonicalKey Canonicalize(const FormulaAst& ast) {
  return CanonicalKey{HexDigest(Fnv1a64(CanonicalText(ast)))};
}

double FormulaSimilarity(const FormulaAst& a, const FormulaAst& b) {
  std::map<std::string, int> labels_a;
  std::map<std::string, int> labels_b;
  CollectLabels(a.root, &labels_a);
  CollectLabels(b.root, &labels_b);

  long long intersection = 0;
  long long union_size = 0;
  auto it_a = labels_a.begin();
  auto it_b = labels_b.begin();
  while (it_a != labels_a.end() || it_b != labels_b.end()) {
    if (it_b == labels_b.end() || (it_a != labels_a.end() && it_a->first < it_b->first)) {
      union_size += it_a->second;
      ++it_a;
    } else if (it_a == labels_a.end() || it_b->first < it_a->first) {
      union_size += it_b->second;
      ++it_b;
    } else {
      intersection += std::min(it_a->second, it_b->second);
      union_size += std::max(it_a->second, it_b->second);
      ++it_a;
      ++it_b;
    }
  }
  if (union_size == 0) {
    return 0.0;
  }
  return static_cast<double>(intersection) / static_cast<double>(union_size);
}

const char* FamilyName(Family family) {
  switch (family) {
    case Family::kPriceTrend:
      return "price-trend";
    case Family::kMeanReversion:
      return "mean-reversion";
    case Family::kVolatility:
      return "volatility";
    case Family::kRange:
      return "range";
    case Family::kLiquidityVolume:
      return "liquidity-volume";
    case Family::kPriceVolumeInteraction:
      return "price-volume-interaction";
    case Family::kOther:
      return "other";
  }
  return "other";
}

std::optional<Family> ParseFamilyName(const std::string& name) {
  if (name == "price-trend" || name == "price trend") return Family::kPriceTrend;
  if (name == "mean-reversion" || name == "mean reversion") return Family::kMeanReversion;
  if (name == "volatility") return Family::kVolatility;
  if (name == "range") return Family::kRange;
  if (name == "liquidity-volume") return Family::kLiquidityVolume;
  if (name == "price-volume-interaction" || name == "price-volume interaction") {
    return Family::kPriceVolumeInteraction;
  }
  if (name == "other") return Family::kOther;
  return std::nullopt;
}

const std::vector<Family>& CanonicalFamilies() {
  static const std::vector<Family> kFamilies = {
      Family::kPriceTrend,         Family::kMeanReversion,
      Family::kVolatility,         Family::kRange,
      Family::kLiquidityVolume,    Family::kPriceVolumeInteraction,
  };
  return kFamilies;
}

Family ClassifyFamily(const FormulaAst& ast, std::optional<Family> declared) {
  if (declared.has_value()) {
    return *declared;
  }
  const AstNode& root = ast.root;
  if (ContainsVariable(root, "HIGH") && ContainsVariable(root, "LOW")) {
    return Family::kRange;
  }
  if (HasDispersionOverReturns(root)) {
    return Family::kVolatility;
  }
  const bool has_volume = ContainsVariable(root, "VOLUME");
  if (has_volume && ContainsPriceField(root)) {
    return Family::kPriceVolumeInteraction;
  }
  if (has_volume) {
    return Family::kLiquidityVolume;
  }
  if (HasTrendAnchor(root)) {
    return Family::kPriceTrend;
  }
  if (HasReversalNegation(root)) {
    return Family::kMeanReversion;
  }
  return Family::kOther;
}

}  // namespace ff::dsl
