#include "crex/tensor.hpp"

#include "crex/kernels.hpp"

namespace crex {

void GradArena::merge(const GradArena& other) {
  for (std::size_t i = 0; i < grads_.size(); ++i) {
    kern::axpy<real>(grads_[i].size(), real(1), other.grads_[i].data(),
                     grads_[i].data());
  }
}

void GradArena::add_to(ParameterStore& store) const {
  for (std::size_t i = 0; i < grads_.size(); ++i) {
    Tensor& g = store.by_id(i).grad;
    kern::axpy<real>(g.size(), real(1), grads_[i].data(), g.data());
  }
}

}  // namespace crex
