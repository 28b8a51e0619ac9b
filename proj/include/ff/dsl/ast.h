#pragma once

#include <string>
#include <vector>

namespace ff::dsl {

// Node kinds. The first seven form the structural whitelist; the rest exist
// so that hostile trees built through the raw node API have a concrete
// representation for the structural layer to reject. The parser never
// produces a non-whitelisted kind.
enum class NodeKind {
  kCall,
  kVariable,
  kLiteral,
  kBinary,
  kUnaryNeg,
  kCompare,
  kConditional,
  kAttribute,
  kSubscript,
  kLambda,
  kStringLiteral,
  kAssign,
};

bool IsWhitelisted(NodeKind kind);
const char* NodeKindName(NodeKind kind);

struct AstNode {
  NodeKind kind = NodeKind::kLiteral;
  // Operator/variable/attribute name for kCall/kVariable/kAttribute,
  // the symbol for kBinary ("+", "-", "*", "/") and kCompare
  // ("<", "<=", ">", ">=", "==", "!=").
  std::string name;
  double value = 0.0;
  bool is_integer = false;
  std::vector<AstNode> children;

  static AstNode Call(std::string op, std::vector<AstNode> args);
  static AstNode Variable(std::string name);
  static AstNode Literal(double value);
  static AstNode IntLiteral(long long value);
  static AstNode Binary(std::string symbol, AstNode lhs, AstNode rhs);
  static AstNode Negate(AstNode operand);
  static AstNode Compare(std::string symbol, AstNode lhs, AstNode rhs);
};

struct FormulaAst {
  AstNode root;
  std::string source;
};

// Canonical text form: minimal parentheses, literals at 12 significant
// digits. Rendering then reparsing reproduces the same tree.
std::string Render(const AstNode& node);
inline std::string Render(const FormulaAst& ast) { return Render(ast.root); }

}  // namespace ff::dsl
