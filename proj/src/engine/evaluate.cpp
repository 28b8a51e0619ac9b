#include "ff/engine/evaluate.h"

#include <atomic>
#include <cmath>
#include <optional>

#include "ff/core/numeric.h"
#include "ff/engine/kernels.h"

namespace ff::engine {

namespace {

std::atomic<std::uint64_t> g_evaluate_invocations{0};

class Interpreter {
 public:
  explicit Interpreter(const panel::Panel& panel) : panel_(panel) {}

  std::optional<Matrix> Eval(const dsl::AstNode& node, std::string* out_error) {
    using dsl::NodeKind;
    switch (node.kind) {
      case NodeKind::kVariable:
        return EvalVariable(node, out_error);
      case NodeKind::kLiteral:
        return Matrix(panel_.dates(), panel_.asset_count(), node.value);
      case NodeKind::kUnaryNeg: {
        auto operand = Eval(node.children[0], out_error);
        if (!operand) {
          return std::nullopt;
        }
        return Elementwise(*operand, [](double x) { return -x; });
      }
      case NodeKind::kBinary:
        return EvalBinary(node, out_error);
      case NodeKind::kCompare:
        return EvalCompare(node, out_error);
      case NodeKind::kConditional:
        return EvalIf(node, out_error);
      case NodeKind::kCall:
        return EvalCall(node, out_error);
      default:
        *out_error = std::string("sandbox bypass: node kind ") +
                     dsl::NodeKindName(node.kind) + " reached evaluation";
        return std::nullopt;
    }
  }

 private:
  template <typename Fn>
  Matrix Elementwise(const Matrix& input, Fn&& fn) {
    Matrix out(input.rows(), input.cols());
    for (std::size_t d = 0; d < input.rows(); ++d) {
      for (std::size_t a = 0; a < input.cols(); ++a) {
        const double x = input.at(d, a);
        if (IsPresent(x)) {
          out.set(d, a, MakeFinite(fn(x)));
        }
      }
    }
    return out;
  }

  template <typename Fn>
  Matrix Combine(const Matrix& lhs, const Matrix& rhs, Fn&& fn) {
    Matrix out(lhs.rows(), lhs.cols());
    for (std::size_t d = 0; d < lhs.rows(); ++d) {
      for (std::size_t a = 0; a < lhs.cols(); ++a) {
        const double x = lhs.at(d, a);
        const double y = rhs.at(d, a);
        if (IsPresent(x) && IsPresent(y)) {
          out.set(d, a, MakeFinite(fn(x, y)));
        }
      }
    }
    return out;
  }

  std::optional<Matrix> EvalVariable(const dsl::AstNode& node,
                                     std::string* out_error) {
    const auto field = panel::ParseFieldName(node.name);
    if (!field) {
      *out_error = "sandbox bypass: unknown variable " + node.name;
      return std::nullopt;
    }
    return panel_.field(*field);
  }

  std::optional<Matrix> EvalBinary(const dsl::AstNode& node,
                                   std::string* out_error) {
    auto lhs = Eval(node.children[0], out_error);
    if (!lhs) {
      return std::nullopt;
    }
    auto rhs = Eval(node.children[1], out_error);
    if (!rhs) {
      return std::nullopt;
    }
    const std::string& op = node.name;
    if (op == "+") {
      return Combine(*lhs, *rhs, [](double x, double y) { return x + y; });
    }
    if (op == "-") {
      return Combine(*lhs, *rhs, [](double x, double y) { return x - y; });
    }
    if (op == "*") {
      return Combine(*lhs, *rhs, [](double x, double y) { return x * y; });
    }
    if (op == "/") {
      // Division by zero poisons the cell instead of failing the candidate.
      return Combine(*lhs, *rhs, [](double x, double y) {
        return y == 0.0 ? kMissing : x / y;
      });
    }
    *out_error = "sandbox bypass: unknown binary operator " + op;
    return std::nullopt;
  }

  std::optional<Matrix> EvalCompare(const dsl::AstNode& node,
                                    std::string* out_error) {
    auto lhs = Eval(node.children[0], out_error);
    if (!lhs) {
      return std::nullopt;
    }
    auto rhs = Eval(node.children[1], out_error);
    if (!rhs) {
      return std::nullopt;
    }
    const std::string& op = node.name;
    auto compare = [&op](double x, double y) -> double {
      bool r = false;
      if (op == "<") {
        r = x < y;
      } else if (op == "<=") {
        r = x <= y;
      } else if (op == ">") {
        r = x > y;
      } else if (op == ">=") {
        r = x >= y;
      } else if (op == "==") {
        r = x == y;
      } else {
        r = x != y;
      }
      return r ? 1.0 : 0.0;
    };
    if (op != "<" && op != "<=" && op != ">" && op != ">=" && op != "==" &&
        op != "!=") {
      *out_error = "sandbox bypass: unknown comparison " + op;
      return std::nullopt;
    }
    return Combine(*lhs, *rhs, compare);
  }

  std::optional<Matrix> EvalIf(const dsl::AstNode& node, std::string* out_error) {
    if (node.children.size() != 3) {
      *out_error = "sandbox bypass: IF expects 3 arguments";
      return std::nullopt;
    }
    auto condition = Eval(node.children[0], out_error);
    if (!condition) {
      return std::nullopt;
    }
    auto then_values = Eval(node.children[1], out_error);
    if (!then_values) {
      return std::nullopt;
    }
    auto otherwise = Eval(node.children[2], out_error);
    if (!otherwise) {
      return std::nullopt;
    }
    return IfSelect(*condition, *then_values, *otherwise);
  }

  std::optional<int> WindowArgument(const dsl::AstNode& node,
                                    std::string* out_error) {
    if (node.children.size() != 2 ||
        node.children[1].kind != dsl::NodeKind::kLiteral ||
        !node.children[1].is_integer || node.children[1].value < 1.0) {
      *out_error = "sandbox bypass: " + node.name +
                   " requires a positive integer window literal";
      return std::nullopt;
    }
    return static_cast<int>(node.children[1].value);
  }

  std::optional<Matrix> EvalCall(const dsl::AstNode& node,
                                 std::string* out_error) {
    const std::string& op = node.name;
    if (op == "TS_SMA" || op == "TS_STD" || op == "TS_VAR" || op == "TS_LOGRET") {
      const auto window = WindowArgument(node, out_error);
      if (!window) {
        return std::nullopt;
      }
      auto input = Eval(node.children[0], out_error);
      if (!input) {
        return std::nullopt;
      }
      if (op == "TS_SMA") {
        return ApplyPerAsset(*input, [w = *window](const std::vector<double>& s) {
          return TsSma(s, w);
        });
      }
      if (op == "TS_STD") {
        return ApplyPerAsset(*input, [w = *window](const std::vector<double>& s) {
          return TsStd(s, w);
        });
      }
      if (op == "TS_VAR") {
        return ApplyPerAsset(*input, [w = *window](const std::vector<double>& s) {
          return TsVar(s, w);
        });
      }
      return ApplyPerAsset(*input, [w = *window](const std::vector<double>& s) {
        return TsLogret(s, w);
      });
    }
    if (op == "CS_RANK" || op == "CS_ZSCORE") {
      if (node.children.size() != 1) {
        *out_error = "sandbox bypass: " + op + " expects 1 argument";
        return std::nullopt;
      }
      auto input = Eval(node.children[0], out_error);
      if (!input) {
        return std::nullopt;
      }
      if (op == "CS_RANK") {
        return ApplyPerDate(*input, CsRank);
      }
      return ApplyPerDate(*input, CsZscore);
    }
    if (op == "IF") {
      return EvalIf(node, out_error);
    }
    *out_error = "sandbox bypass: unregistered operator " + op +
                 " reached evaluation";
    return std::nullopt;
  }

  const panel::Panel& panel_;
};

}  // namespace

bool Evaluate(const dsl::FormulaAst& ast, const panel::Panel& panel,
              FactorMatrix* out, std::string* out_error) {
  g_evaluate_invocations.fetch_add(1, std::memory_order_relaxed);
  Interpreter interpreter(panel);
  std::string error;
  auto values = interpreter.Eval(ast.root, &error);
  if (!values) {
    if (out_error != nullptr) {
      *out_error = error;
    }
    return false;
  }
  out->values = std::move(*values);
  out->provenance_key = dsl::Canonicalize(ast).digest;
  return true;
}

std::uint64_t EvaluateInvocationCount() {
  return g_evaluate_invocations.load(std::memory_order_relaxed);
}

}  // namespace ff::engine
