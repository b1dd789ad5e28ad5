#pragma once

#include <cstdint>
#include <vector>

#include "crex/tensor.hpp"

namespace crex {

struct AdamConfig {
  real lr = real(0.001);
  real beta1 = real(0.9);
  real beta2 = real(0.999);
  real eps = real(1e-8);
};

// First/second moment accumulators per parameter, plus the shared step count.
class AdamState {
 public:
  AdamState(const ParameterStore& store, AdamConfig cfg = {});

  // Standard bias-corrected update from the gradients currently in the
  // store.  Frozen parameters are untouched.  Gradients are zeroed after.
  void step(ParameterStore& store);

  std::uint64_t steps_taken() const { return t_; }
  const AdamConfig& config() const { return cfg_; }

 private:
  AdamConfig cfg_;
  std::uint64_t t_ = 0;
  std::vector<Tensor> m_, v_;
};

}  // namespace crex
