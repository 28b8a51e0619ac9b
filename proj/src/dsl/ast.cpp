#include "ff/dsl/ast.h"

#include <cmath>
#include <cstdio>
#include <utility>

#include "ff/core/numeric.h"

namespace ff::dsl {

bool IsWhitelisted(NodeKind kind) {
  switch (kind) {
    case NodeKind::kCall:
    case NodeKind::kVariable:
    case NodeKind::kLiteral:
    case NodeKind::kBinary:
    case NodeKind::kUnaryNeg:
    case NodeKind::kCompare:
    case NodeKind::kConditional:
      return true;
    default:
      return false;
  }
}

const char* NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kCall:
      return "call";
    case NodeKind::kVariable:
      return "variable";
    case NodeKind::kLiteral:
      return "literal";
    case NodeKind::kBinary:
      return "binary";
    case NodeKind::kUnaryNeg:
      return "negation";
    case NodeKind::kCompare:
      return "comparison";
    case NodeKind::kConditional:
      return "conditional";
    case NodeKind::kAttribute:
      return "attribute-access";
    case NodeKind::kSubscript:
      return "subscript";
    case NodeKind::kLambda:
      return "lambda";
    case NodeKind::kStringLiteral:
      return "string-literal";
    case NodeKind::kAssign:
      return "assignment";
  }
  return "unknown";
}

AstNode AstNode::Call(std::string op, std::vector<AstNode> args) {
  AstNode node;
  node.kind = NodeKind::kCall;
  node.name = std::move(op);
  node.children = std::move(args);
  return node;
}

AstNode AstNode::Variable(std::string name) {
  AstNode node;
  node.kind = NodeKind::kVariable;
  node.name = std::move(name);
  return node;
}

AstNode AstNode::Literal(double value) {
  AstNode node;
  node.kind = NodeKind::kLiteral;
  node.value = value;
  node.is_integer = false;
  return node;
}

AstNode AstNode::IntLiteral(long long value) {
  AstNode node;
  node.kind = NodeKind::kLiteral;
  node.value = static_cast<double>(value);
  node.is_integer = true;
  return node;
}

AstNode AstNode::Binary(std::string symbol, AstNode lhs, AstNode rhs) {
  AstNode node;
  node.kind = NodeKind::kBinary;
  node.name = std::move(symbol);
  node.children.push_back(std::move(lhs));
  node.children.push_back(std::move(rhs));
  return node;
}

AstNode AstNode::Negate(AstNode operand) {
  AstNode node;
  node.kind = NodeKind::kUnaryNeg;
  node.children.push_back(std::move(operand));
  return node;
}

AstNode AstNode::Compare(std::string symbol, AstNode lhs, AstNode rhs) {
  AstNode node;
  node.kind = NodeKind::kCompare;
  node.name = std::move(symbol);
  node.children.push_back(std::move(lhs));
  node.children.push_back(std::move(rhs));
  return node;
}

namespace {

// Precedence levels used to decide where parentheses are required.
// Comparison binds loosest, unary negation tightest.
int Precedence(const AstNode& node) {
  switch (node.kind) {
    case NodeKind::kCompare:
      return 1;
    case NodeKind::kBinary:
      return (node.name == "+" || node.name == "-") ? 2 : 3;
    case NodeKind::kUnaryNeg:
      return 4;
    default:
      return 5;
  }
}

std::string RenderLiteral(const AstNode& node) {
  if (node.is_integer) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(node.value));
    return buf;
  }
  return FormatNumber(node.value);
}

void RenderInto(const AstNode& node, std::string* out);

// A right operand at equal precedence must keep its parentheses, otherwise
// "a - (b - c)" would re-associate on reparse.
void RenderChild(const AstNode& child, int parent_precedence, bool is_right,
                 std::string* out) {
  const int child_precedence = Precedence(child);
  const bool parens = child_precedence < parent_precedence ||
                      (is_right && child_precedence == parent_precedence);
  if (parens) {
    out->push_back('(');
  }
  RenderInto(child, out);
  if (parens) {
    out->push_back(')');
  }
}

void RenderInto(const AstNode& node, std::string* out) {
  switch (node.kind) {
    case NodeKind::kCall:
    case NodeKind::kConditional: {
      out->append(node.kind == NodeKind::kConditional ? "IF" : node.name);
      out->push_back('(');
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0) {
          out->append(", ");
        }
        RenderInto(node.children[i], out);
      }
      out->push_back(')');
      return;
    }
    case NodeKind::kVariable:
      out->append(node.name);
      return;
    case NodeKind::kLiteral:
      out->append(RenderLiteral(node));
      return;
    case NodeKind::kBinary:
    case NodeKind::kCompare: {
      const int prec = Precedence(node);
      RenderChild(node.children[0], prec, false, out);
      out->push_back(' ');
      out->append(node.name);
      out->push_back(' ');
      RenderChild(node.children[1], prec, true, out);
      return;
    }
    case NodeKind::kUnaryNeg: {
      out->push_back('-');
      RenderChild(node.children[0], Precedence(node), false, out);
      return;
    }
    default:
      // Non-whitelisted nodes never survive validation; render a marker so
      // diagnostics stay printable.
      out->append("<");
      out->append(NodeKindName(node.kind));
      out->append(">");
      return;
  }
}

}  // namespace

std::string Render(const AstNode& node) {
  std::string out;
  RenderInto(node, &out);
  return out;
}

}  // namespace ff::dsl
