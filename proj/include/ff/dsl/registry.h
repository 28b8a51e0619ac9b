#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace ff::dsl {

enum class OperatorKind { kArithmetic, kTimeSeries, kCrossSectional, kLogical };

const char* OperatorKindName(OperatorKind kind);
std::optional<OperatorKind> ParseOperatorKind(const std::string& name);

struct OperatorSpec {
  std::string name;
  int arity = 0;
  OperatorKind kind = OperatorKind::kArithmetic;
  // Argument indices that must be positive integer literals (window / lag
  // parameters). Every index is < arity.
  std::set<int> window_positions;
};

// Operator registry plus the fixed field whitelist (OPEN, HIGH, LOW, CLOSE,
// VOLUME, VWAP). Immutable after construction.
class OperatorRegistry {
 public:
  static bool Create(std::vector<OperatorSpec> specs, OperatorRegistry* out,
                     std::string* out_error);

  const OperatorSpec* Find(const std::string& name) const;
  bool IsField(const std::string& name) const;

  const std::vector<OperatorSpec>& operators() const { return operators_; }
  const std::vector<std::string>& fields() const { return fields_; }

 private:
  std::vector<OperatorSpec> operators_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::vector<std::string> fields_;
};

// TS_SMA, TS_STD, TS_VAR, TS_LOGRET, CS_RANK, CS_ZSCORE, IF.
OperatorRegistry DefaultRegistry();

// Loads a registry from a JSON array of operator specs (schema documented in
// docs/artifacts.md).
bool LoadRegistryFile(const std::string& path, OperatorRegistry* out,
                      std::string* out_error);

}  // namespace ff::dsl
