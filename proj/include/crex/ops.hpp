#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crex/rng.hpp"
#include "crex/tensor.hpp"

namespace crex {

enum class Mode { train, infer };

// ---- embedding lookup ------------------------------------------------------

// out must have indices.size() rows and table.cols() columns.
void embed(std::span<const std::int32_t> indices, const Tensor& table, Tensor& out);

// Scatter-add the upstream row gradients into the table's gradient rows.
void embed_backward(std::span<const std::int32_t> indices, const Tensor& d_out,
                    Tensor& d_table);

// ---- softmax / cross-entropy ----------------------------------------------

// probs = softmax(W h + b); max-subtraction for stability.
// W is (classes x dim), h length dim, b and probs length classes.
void dense_softmax(const Tensor& W, const Tensor& b, const real* h, real* probs);

// softmax over logits in place (probs may alias logits)
void softmax(std::size_t n, const real* logits, real* probs);

// -log(max(probs[gold], 1e-12))
real cross_entropy(std::span<const real> probs, std::size_t gold);

// d_logits = scale * (probs - onehot(gold)); gradient of cross_entropy after
// softmax with respect to the logits.
void softmax_xent_backward(std::span<const real> probs, std::size_t gold,
                           real scale, real* d_logits);

// ---- dropout ----------------------------------------------------------------

// Inverted dropout.  In train mode, zeroes each component with probability
// `rate` and scales survivors by 1/(1-rate); mask records survivors.  In
// infer mode the input passes through and the mask is all ones.
void dropout(std::span<real> x, real rate, Mode mode, Rng& rng,
             std::vector<std::uint8_t>& mask);

// d_in = d_out scaled by the saved mask
void dropout_backward(std::span<real> d, real rate,
                      const std::vector<std::uint8_t>& mask);

}  // namespace crex
