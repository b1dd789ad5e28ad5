#pragma once

#include <string>

#include "crex/tensor.hpp"

namespace crex {

// Single-layer LSTM, no peepholes; gate order i, f, o, g.
struct LstmParams {
  std::size_t input_dim = 0;
  std::size_t hidden = 0;
  Parameter* wx[4] = {};  // hidden x input_dim
  Parameter* wh[4] = {};  // hidden x hidden
  Parameter* b[4] = {};   // hidden

  // Registers <prefix>.wx_i, .wh_i, .b_i, ... in the store.  Weights start
  // uniform in [init_lo, init_hi]; the forget-gate bias starts at 1.
  static LstmParams create(ParameterStore& store, const std::string& prefix,
                           std::size_t input_dim, std::size_t hidden,
                           real init_lo, real init_hi);

  static LstmParams lookup(ParameterStore& store, const std::string& prefix,
                           std::size_t input_dim, std::size_t hidden);
};

struct LstmCache {
  std::size_t steps = 0;
  Tensor gates;   // T x 4H, post-activation, laid out [i | f | o | g]
  Tensor cell;    // T x H
  Tensor tanh_c;  // T x H
  Tensor hidden;  // T x H

  const real* last_hidden() const { return hidden.row(steps - 1); }
};

// inputs is T x input_dim with T >= 1; fills the cache and returns h_T
// through cache.last_hidden().  h_0 = c_0 = 0.
void lstm_forward(const Tensor& inputs, const LstmParams& p, LstmCache& cache);

// Backpropagates d(h_T) through the recurrence; accumulates parameter
// gradients into the arena and writes d(inputs) (same shape as inputs).
void lstm_backward(const Tensor& inputs, const LstmParams& p,
                   const LstmCache& cache, const real* d_last_hidden,
                   GradArena& arena, Tensor& d_inputs);

}  // namespace crex
