#include "ff/dsl/parser.h"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace ff::dsl {

namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::optional<AstNode> Run(ParseError* error) {
    SkipWhitespace();
    auto node = ParseExpression();
    if (!node) {
      *error = error_;
      return std::nullopt;
    }
    SkipWhitespace();
    if (pos_ != text_.size()) {
      Fail("unexpected trailing input");
      *error = error_;
      return std::nullopt;
    }
    return node;
  }

 private:
  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char PeekAt(std::size_t offset) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }
  void Advance() { ++pos_; }

  void SkipWhitespace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::nullopt_t Fail(std::string message) {
    if (error_.offset < 0) {
      error_.message = std::move(message);
      error_.offset = static_cast<int>(pos_);
    }
    return std::nullopt;
  }

  std::optional<AstNode> ParseExpression() { return ParseComparison(); }

  std::optional<AstNode> ParseComparison() {
    auto lhs = ParseAdditive();
    if (!lhs) {
      return std::nullopt;
    }
    while (true) {
      SkipWhitespace();
      std::string op;
      const char c = Peek();
      if (c == '<' || c == '>') {
        op.push_back(c);
        if (PeekAt(1) == '=') {
          op.push_back('=');
        }
      } else if ((c == '=' || c == '!') && PeekAt(1) == '=') {
        op.push_back(c);
        op.push_back('=');
      } else {
        break;
      }
      pos_ += op.size();
      SkipWhitespace();
      auto rhs = ParseAdditive();
      if (!rhs) {
        return std::nullopt;
      }
      lhs = AstNode::Compare(op, std::move(*lhs), std::move(*rhs));
    }
    return lhs;
  }

  std::optional<AstNode> ParseAdditive() {
    auto lhs = ParseMultiplicative();
    if (!lhs) {
      return std::nullopt;
    }
    while (true) {
      SkipWhitespace();
      const char c = Peek();
      if (c != '+' && c != '-') {
        break;
      }
      Advance();
      SkipWhitespace();
      auto rhs = ParseMultiplicative();
      if (!rhs) {
        return std::nullopt;
      }
      lhs = AstNode::Binary(std::string(1, c), std::move(*lhs), std::move(*rhs));
    }
    return lhs;
  }

  std::optional<AstNode> ParseMultiplicative() {
    auto lhs = ParseUnary();
    if (!lhs) {
      return std::nullopt;
    }
    while (true) {
      SkipWhitespace();
      const char c = Peek();
      if (c != '*' && c != '/') {
        break;
      }
      Advance();
      SkipWhitespace();
      auto rhs = ParseUnary();
      if (!rhs) {
        return std::nullopt;
      }
      lhs = AstNode::Binary(std::string(1, c), std::move(*lhs), std::move(*rhs));
    }
    return lhs;
  }

  std::optional<AstNode> ParseUnary() {
    SkipWhitespace();
    if (Peek() == '-') {
      Advance();
      auto operand = ParseUnary();
      if (!operand) {
        return std::nullopt;
      }
      return AstNode::Negate(std::move(*operand));
    }
    return ParsePrimary();
  }

  std::optional<AstNode> ParsePrimary() {
    SkipWhitespace();
    const char c = Peek();
    if (c == '(') {
      Advance();
      auto inner = ParseExpression();
      if (!inner) {
        return std::nullopt;
      }
      SkipWhitespace();
      if (Peek() != ')') {
        return Fail("expected ')'");
      }
      Advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return ParseNumberToken();
    }
    if (IsIdentStart(c)) {
      return ParseIdentifier();
    }
    if (c == '\0') {
      return Fail("unexpected end of input");
    }
    return Fail("unexpected character");
  }

  std::optional<AstNode> ParseNumberToken() {
    const std::size_t start = pos_;
    bool is_integer = true;
    while (std::isdigit(static_cast<unsigned char>(Peek()))) {
      Advance();
    }
    if (Peek() == '.') {
      is_integer = false;
      Advance();
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        Advance();
      }
    }
    if (Peek() == 'e' || Peek() == 'E') {
      is_integer = false;
      Advance();
      if (Peek() == '+' || Peek() == '-') {
        Advance();
      }
      if (!std::isdigit(static_cast<unsigned char>(Peek()))) {
        return Fail("malformed exponent");
      }
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        Advance();
      }
    }
    const std::string token(text_.substr(start, pos_ - start));
    if (token == ".") {
      pos_ = start;
      return Fail("malformed number");
    }
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == nullptr || *end != '\0') {
      pos_ = start;
      return Fail("malformed number");
    }
    if (is_integer) {
      return AstNode::IntLiteral(static_cast<long long>(value));
    }
    return AstNode::Literal(value);
  }

  std::optional<AstNode> ParseIdentifier() {
    const std::size_t start = pos_;
    while (IsIdentChar(Peek())) {
      Advance();
    }
    std::string name(text_.substr(start, pos_ - start));
    SkipWhitespace();
    if (Peek() != '(') {
      return AstNode::Variable(std::move(name));
    }
    Advance();
    std::vector<AstNode> args;
    SkipWhitespace();
    if (Peek() == ')') {
      Advance();
      return AstNode::Call(std::move(name), std::move(args));
    }
    while (true) {
      auto arg = ParseExpression();
      if (!arg) {
        return std::nullopt;
      }
      args.push_back(std::move(*arg));
      SkipWhitespace();
      const char c = Peek();
      if (c == ',') {
        Advance();
        SkipWhitespace();
        continue;
      }
      if (c == ')') {
        Advance();
        return AstNode::Call(std::move(name), std::move(args));
      }
      return Fail("expected ',' or ')' in argument list");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  ParseError error_;
};

}  // namespace

std::optional<FormulaAst> ParseFormula(std::string_view text, ParseError* error) {
  ParseError local;
  ParseError* err = error != nullptr ? error : &local;
  if (text.empty()) {
    err->message = "empty formula";
    err->offset = 0;
    return std::nullopt;
  }
  if (text.size() > kMaxFormulaLength) {
    err->message = "formula exceeds character budget";
    err->offset = static_cast<int>(kMaxFormulaLength);
    return std::nullopt;
  }
  Parser parser(text);
  auto root = parser.Run(err);
  if (!root) {
    return std::nullopt;
  }
  FormulaAst ast;
  ast.root = std::move(*root);
  ast.source = std::string(text);
  return ast;
}

}  // namespace ff::dsl
