#pragma once

#include <cstdint>

#include "ff/mining/generator.h"

namespace ff::mining {

// Offline grammar-based sampler over the registered operator language.
// Deterministic for a fixed (bundle, seed): the per-call stream is derived
// from the base seed and the bundle's round/batch identity, so resumed runs
// regenerate identical batches. Biased toward families the bundle marks as
// under-explored, and intentionally emits occasional duplicates and
// malformed strings to exercise the error paths.
class MockGenerator : public Generator {
 public:
  MockGenerator(std::uint64_t seed, double malformed_rate, double duplicate_rate)
      : seed_(seed),
        malformed_rate_(malformed_rate),
        duplicate_rate_(duplicate_rate) {}

  bool Generate(const PromptBundle& bundle, GenerationResult* out,
                std::string* out_error) override;

 private:
  std::uint64_t seed_;
  double malformed_rate_;
  double duplicate_rate_;
};

}  // namespace ff::mining
