#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ff/dsl/ast.h"
#include "ff/dsl/registry.h"

namespace ff::dsl {

struct SandboxPolicy {
  int max_depth = 12;
  int max_nodes = 64;
};

// Window parameters are integer literals within one trading year.
inline constexpr long long kMinWindowLiteral = 1;
inline constexpr long long kMaxWindowLiteral = 252;

enum class SandboxLayer { kStructural, kComplexity, kSemantic };

const char* SandboxLayerName(SandboxLayer layer);

struct ValidationReport {
  bool accepted = false;
  std::optional<SandboxLayer> failed_layer;
  std::vector<std::string> reasons;

  static ValidationReport Accept() { return {true, std::nullopt, {}}; }
  static ValidationReport Reject(SandboxLayer layer,
                                 std::vector<std::string> reasons) {
    return {false, layer, std::move(reasons)};
  }
};

// Layer checks are independent and evaluation-free: rejection is a report,
// never an exception, and no formula semantics run here.
ValidationReport ValidateStructure(const FormulaAst& ast,
                                   const SandboxPolicy& policy);
ValidationReport ValidateComplexity(const FormulaAst& ast,
                                    const SandboxPolicy& policy);
ValidationReport ValidateSemantics(const FormulaAst& ast,
                                   const OperatorRegistry& registry);

// Runs structural, then complexity, then semantic checks; returns the first
// rejection.
ValidationReport Validate(const FormulaAst& ast, const SandboxPolicy& policy,
                          const OperatorRegistry& registry);

}  // namespace ff::dsl
