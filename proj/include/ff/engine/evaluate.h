#pragma once

#include <cstdint>
#include <string>

#include "ff/core/matrix.h"
#include "ff/dsl/analysis.h"
#include "ff/dsl/ast.h"
#include "ff/panel/panel.h"

namespace ff::engine {

struct FactorMatrix {
  Matrix values;
  std::string provenance_key;  // canonical key of the generating formula
};

// Interprets a sandbox-accepted formula over the panel. Domain errors
// (division by zero, log of a non-positive value, incomplete windows) poison
// individual cells; they never fail the candidate. Returns false only when
// the tree could not have passed the sandbox (unknown operator, bad arity,
// non-literal window), which indicates a validation bypass.
bool Evaluate(const dsl::FormulaAst& ast, const panel::Panel& panel,
              FactorMatrix* out, std::string* out_error);

// Total number of Evaluate invocations in this process. Lets tests assert
// that parse/validation paths never execute formula semantics.
std::uint64_t EvaluateInvocationCount();

}  // namespace ff::engine
