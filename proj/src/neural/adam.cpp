#include "crex/adam.hpp"

#include <cmath>
#include <stdexcept>

#include "crex/kernels.hpp"

namespace crex {

AdamState::AdamState(const ParameterStore& store, AdamConfig cfg) : cfg_(cfg) {
  m_.reserve(store.count());
  v_.reserve(store.count());
  for (std::size_t i = 0; i < store.count(); ++i) {
    const Tensor& val = store.by_id(i).value;
    m_.emplace_back(val.rows(), val.cols());
    v_.emplace_back(val.rows(), val.cols());
  }
}

void AdamState::step(ParameterStore& store) {
  if (store.count() != m_.size())
    throw std::runtime_error("adam: store changed since state was created");
  ++t_;
  const real c1 = real(1) / (real(1) - std::pow(cfg_.beta1, real(t_)));
  const real c2 = real(1) / (real(1) - std::pow(cfg_.beta2, real(t_)));
  for (std::size_t i = 0; i < store.count(); ++i) {
    Parameter& p = store.by_id(i);
    if (!p.value.same_shape(p.grad) || !p.value.same_shape(m_[i]))
      throw std::runtime_error("adam: shape mismatch for " + p.name);
    if (p.trainable) {
      kern::adam<real>(p.value.size(), p.value.data(), p.grad.data(),
                       m_[i].data(), v_[i].data(), cfg_.lr, cfg_.beta1,
                       cfg_.beta2, c1, c2, cfg_.eps);
    }
    p.grad.zero();
  }
}

}  // namespace crex
