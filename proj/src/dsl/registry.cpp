#include "ff/dsl/registry.h"

#include <fstream>
#include <utility>

#include <json.hpp>

namespace ff::dsl {

const char* OperatorKindName(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kArithmetic:
      return "arithmetic";
    case OperatorKind::kTimeSeries:
      return "time-series";
    case OperatorKind::kCrossSectional:
      return "cross-sectional";
    case OperatorKind::kLogical:
      return "logical";
  }
  return "arithmetic";
}

std::optional<OperatorKind> ParseOperatorKind(const std::string& name) {
  if (name == "arithmetic") return OperatorKind::kArithmetic;
  if (name == "time-series") return OperatorKind::kTimeSeries;
  if (name == "cross-sectional") return OperatorKind::kCrossSectional;
  if (name == "logical") return OperatorKind::kLogical;
  return std::nullopt;
}

bool OperatorRegistry::Create(std::vector<OperatorSpec> specs,
                              OperatorRegistry* out, std::string* out_error) {
  if (specs.empty()) {
    if (out_error != nullptr) {
      *out_error = "operator registry must not be empty";
    }
    return false;
  }
  OperatorRegistry registry;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const OperatorSpec& spec = specs[i];
    if (registry.by_name_.contains(spec.name)) {
      if (out_error != nullptr) {
        *out_error = "duplicate operator name: " + spec.name;
      }
      return false;
    }
    for (int pos : spec.window_positions) {
      if (pos < 0 || pos >= spec.arity) {
        if (out_error != nullptr) {
          *out_error = "window position out of range for operator " + spec.name;
        }
        return false;
      }
    }
    registry.by_name_.emplace(spec.name, i);
  }
  registry.operators_ = std::move(specs);
  registry.fields_ = {"OPEN", "HIGH", "LOW", "CLOSE", "VOLUME", "VWAP"};
  *out = std::move(registry);
  return true;
}

const OperatorSpec* OperatorRegistry::Find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) {
    return nullptr;
  }
  return &operators_[it->second];
}

bool OperatorRegistry::IsField(const std::string& name) const {
  for (const std::string& field : fields_) {
    if (field == name) {
      return true;
    }
  }
  return false;
}

OperatorRegistry DefaultRegistry() {
  std::vector<OperatorSpec> specs = {
      {"TS_SMA", 2, OperatorKind::kTimeSeries, {1}},
      {"TS_STD", 2, OperatorKind::kTimeSeries, {1}},
      {"TS_VAR", 2, OperatorKind::kTimeSeries, {1}},
      {"TS_LOGRET", 2, OperatorKind::kTimeSeries, {1}},
      {"CS_RANK", 1, OperatorKind::kCrossSectional, {}},
      {"CS_ZSCORE", 1, OperatorKind::kCrossSectional, {}},
      {"IF", 3, OperatorKind::kLogical, {}},
  };
  OperatorRegistry registry;
  std::string error;
  OperatorRegistry::Create(std::move(specs), &registry, &error);
  return registry;
}

bool LoadRegistryFile(const std::string& path, OperatorRegistry* out,
                      std::string* out_error) {
  std::ifstream in(path);
  if (!in.is_open()) {
    if (out_error != nullptr) {
      *out_error = "cannot open registry file: " + path;
    }
    return false;
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    if (out_error != nullptr) {
      *out_error = std::string("malformed registry file: ") + e.what();
    }
    return false;
  }
  if (!doc.is_array()) {
    if (out_error != nullptr) {
      *out_error = "registry file must be a JSON array";
    }
    return false;
  }
  std::vector<OperatorSpec> specs;
  for (const auto& entry : doc) {
    OperatorSpec spec;
    if (!entry.contains("name") || !entry.contains("arity") ||
        !entry.contains("kind")) {
      if (out_error != nullptr) {
        *out_error = "registry entry missing name/arity/kind";
      }
      return false;
    }
    spec.name = entry["name"].get<std::string>();
    spec.arity = entry["arity"].get<int>();
    auto kind = ParseOperatorKind(entry["kind"].get<std::string>());
    if (!kind) {
      if (out_error != nullptr) {
        *out_error = "unknown operator kind in registry entry " + spec.name;
      }
      return false;
    }
    spec.kind = *kind;
    if (entry.contains("window_positions")) {
      for (const auto& pos : entry["window_positions"]) {
        spec.window_positions.insert(pos.get<int>());
      }
    }
    specs.push_back(std::move(spec));
  }
  return OperatorRegistry::Create(std::move(specs), out, out_error);
}

}  // namespace ff::dsl
