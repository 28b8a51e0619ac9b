#include "ff/dsl/sandbox.h"

#include <algorithm>
#include <cmath>

namespace ff::dsl {

const char* SandboxLayerName(SandboxLayer layer) {
  switch (layer) {
    case SandboxLayer::kStructural:
      return "structural";
    case SandboxLayer::kComplexity:
      return "complexity";
    case SandboxLayer::kSemantic:
      return "semantic";
  }
  return "structural";
}

namespace {

void CollectNonWhitelisted(const AstNode& node, std::vector<std::string>* reasons) {
  if (!IsWhitelisted(node.kind)) {
    reasons->push_back(std::string("non-whitelisted node kind: ") +
                       NodeKindName(node.kind));
  }
  for (const AstNode& child : node.children) {
    CollectNonWhitelisted(child, reasons);
  }
}

int TreeDepth(const AstNode& node) {
  int best = 0;
  for (const AstNode& child : node.children) {
    best = std::max(best, TreeDepth(child));
  }
  return best + 1;
}

int TreeNodes(const AstNode& node) {
  int total = 1;
  for (const AstNode& child : node.children) {
    total += TreeNodes(child);
  }
  return total;
}

bool IsPositiveWindowLiteral(const AstNode& node) {
  if (node.kind != NodeKind::kLiteral || !node.is_integer) {
    return false;
  }
  const long long value = static_cast<long long>(node.value);
  return value >= kMinWindowLiteral && value <= kMaxWindowLiteral;
}

void CheckSemantics(const AstNode& node, const OperatorRegistry& registry,
                    std::vector<std::string>* reasons) {
  switch (node.kind) {
    case NodeKind::kCall: {
      const OperatorSpec* spec = registry.Find(node.name);
      if (spec == nullptr) {
        reasons->push_back("unknown operator " + node.name);
      } else {
        if (static_cast<int>(node.children.size()) != spec->arity) {
          reasons->push_back("operator " + node.name + " expects " +
                             std::to_string(spec->arity) + " arguments, got " +
                             std::to_string(node.children.size()));
        }
        for (int pos : spec->window_positions) {
          if (pos < static_cast<int>(node.children.size()) &&
              !IsPositiveWindowLiteral(node.children[pos])) {
            reasons->push_back("window parameter must be positive integer literal in [" +
                               std::to_string(kMinWindowLiteral) + ", " +
                               std::to_string(kMaxWindowLiteral) + "] (operator " +
                               node.name + ", argument " + std::to_string(pos) + ")");
          }
        }
      }
      break;
    }
    case NodeKind::kVariable: {
      if (!registry.IsField(node.name)) {
        reasons->push_back("unknown variable " + node.name);
      }
      break;
    }
    case NodeKind::kConditional: {
      if (node.children.size() != 3) {
        reasons->push_back("conditional expects 3 operands");
      }
      break;
    }
    default:
      break;
  }
  for (const AstNode& child : node.children) {
    CheckSemantics(child, registry, reasons);
  }
}

}  // namespace

ValidationReport ValidateStructure(const FormulaAst& ast,
                                   const SandboxPolicy& /*policy*/) {
  std::vector<std::string> reasons;
  CollectNonWhitelisted(ast.root, &reasons);
  if (!reasons.empty()) {
    return ValidationReport::Reject(SandboxLayer::kStructural, std::move(reasons));
  }
  return ValidationReport::Accept();
}

ValidationReport ValidateComplexity(const FormulaAst& ast,
                                    const SandboxPolicy& policy) {
  std::vector<std::string> reasons;
  const int depth = TreeDepth(ast.root);
  const int nodes = TreeNodes(ast.root);
  if (depth > policy.max_depth) {
    reasons.push_back("depth " + std::to_string(depth) + " exceeds limit " +
                      std::to_string(policy.max_depth));
  }
  if (nodes > policy.max_nodes) {
    reasons.push_back("node count " + std::to_string(nodes) + " exceeds limit " +
                      std::to_string(policy.max_nodes));
  }
  if (!reasons.empty()) {
    return ValidationReport::Reject(SandboxLayer::kComplexity, std::move(reasons));
  }
  return ValidationReport::Accept();
}

ValidationReport ValidateSemantics(const FormulaAst& ast,
                                   const OperatorRegistry& registry) {
  std::vector<std::string> reasons;
  CheckSemantics(ast.root, registry, &reasons);
  if (!reasons.empty()) {
    return ValidationReport::Reject(SandboxLayer::kSemantic, std::move(reasons));
  }
  return ValidationReport::Accept();
}

ValidationReport Validate(const FormulaAst& ast, const SandboxPolicy& policy,
                          const OperatorRegistry& registry) {
  ValidationReport report = ValidateStructure(ast, policy);
  if (!report.accepted) {
    return report;
  }
  report = ValidateComplexity(ast, policy);
  if (!report.accepted) {
    return report;
  }
  return ValidateSemantics(ast, registry);
}

}  // namespace ff::dsl
