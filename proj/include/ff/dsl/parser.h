#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ff/dsl/ast.h"

namespace ff::dsl {

inline constexpr std::size_t kMaxFormulaLength = 4096;

struct ParseError {
  std::string message;
  int offset = -1;
};

// Recursive-descent parser for the formula grammar:
//
//   expression  := comparison
//   comparison  := additive ((< | <= | > | >= | == | !=) additive)*
//   additive    := multiplicative ((+ | -) multiplicative)*
//   multiplicative := unary ((* | /) unary)*
//   unary       := - unary | primary
//   primary     := NUMBER | IDENT | IDENT(args) | ( expression )
//
// Parsing never evaluates anything and accepts arbitrary bytes as input;
// anything outside the grammar yields a ParseError with the byte offset.
std::optional<FormulaAst> ParseFormula(std::string_view text, ParseError* error);

}  // namespace ff::dsl
