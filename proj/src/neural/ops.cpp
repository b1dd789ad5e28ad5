#include "crex/ops.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "crex/kernels.hpp"

namespace crex {

void embed(std::span<const std::int32_t> indices, const Tensor& table, Tensor& out) {
  const std::size_t d = table.cols();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto idx = indices[i];
    if (idx < 0 || static_cast<std::size_t>(idx) >= table.rows())
      throw std::out_of_range("embed: index " + std::to_string(idx) +
                              " outside table with " + std::to_string(table.rows()) + " rows");
    std::memcpy(out.row(i), table.row(static_cast<std::size_t>(idx)), d * sizeof(real));
  }
}

void embed_backward(std::span<const std::int32_t> indices, const Tensor& d_out,
                    Tensor& d_table) {
  const std::size_t d = d_table.cols();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto idx = indices[i];
    if (idx < 0 || static_cast<std::size_t>(idx) >= d_table.rows())
      throw std::out_of_range("embed_backward: index out of range");
    kern::axpy<real>(d, real(1), d_out.row(i), d_table.row(static_cast<std::size_t>(idx)));
  }
}

void softmax(std::size_t n, const real* logits, real* probs) {
  const real m = kern::max<real>(n, logits);
  real z = 0;
  for (std::size_t i = 0; i < n; ++i) {
    probs[i] = std::exp(logits[i] - m);
    z += probs[i];
  }
  kern::scal<real>(n, real(1) / z, probs);
}

void dense_softmax(const Tensor& W, const Tensor& b, const real* h, real* probs) {
  const std::size_t classes = W.rows();
  std::memcpy(probs, b.data(), classes * sizeof(real));
  kern::gemv<real>(classes, W.cols(), W.data(), h, probs);
  softmax(classes, probs, probs);
}

real cross_entropy(std::span<const real> probs, std::size_t gold) {
  if (gold >= probs.size())
    throw std::out_of_range("cross_entropy: gold class out of range");
  const real p = probs[gold] < real(1e-12) ? real(1e-12) : probs[gold];
  return -std::log(p);
}

void softmax_xent_backward(std::span<const real> probs, std::size_t gold,
                           real scale, real* d_logits) {
  for (std::size_t i = 0; i < probs.size(); ++i) d_logits[i] = scale * probs[i];
  d_logits[gold] -= scale;
}

void dropout(std::span<real> x, real rate, Mode mode, Rng& rng,
             std::vector<std::uint8_t>& mask) {
  mask.assign(x.size(), 1);
  if (mode == Mode::infer || rate <= real(0)) return;
  const real keep_scale = real(1) / (real(1) - rate);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (rng.next_double() < static_cast<double>(rate)) {
      x[i] = 0;
      mask[i] = 0;
    } else {
      x[i] *= keep_scale;
    }
  }
}

void dropout_backward(std::span<real> d, real rate,
                      const std::vector<std::uint8_t>& mask) {
  if (rate <= real(0)) return;
  const real keep_scale = real(1) / (real(1) - rate);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = mask[i] ? d[i] * keep_scale : real(0);
}

}  // namespace crex
