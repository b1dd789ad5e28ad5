#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crex/real.hpp"
#include "crex/rng.hpp"

namespace crex {

// Dense row-major tensor of rank 1 or 2 (vectors have cols == 1).
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, real(0)) {}
  explicit Tensor(std::size_t n) : Tensor(n, 1) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  real* data() { return data_.data(); }
  const real* data() const { return data_.data(); }
  real* row(std::size_t i) { return data_.data() + i * cols_; }
  const real* row(std::size_t i) const { return data_.data() + i * cols_; }

  real& operator[](std::size_t i) { return data_[i]; }
  real operator[](std::size_t i) const { return data_[i]; }
  real& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  real at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void zero() { std::fill(data_.begin(), data_.end(), real(0)); }
  void fill(real v) { std::fill(data_.begin(), data_.end(), v); }

  bool same_shape(const Tensor& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  std::span<real> flat() { return {data_.data(), data_.size()}; }
  std::span<const real> flat() const { return {data_.data(), data_.size()}; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<real> data_;
};

struct Parameter {
  std::size_t id = 0;
  std::string name;
  Tensor value;
  Tensor grad;       // zeroed at the start of every optimization step
  bool trainable = true;
};

// Named trainable tensors.  Registration is idempotent-hostile on purpose:
// a name may be registered once; models that share a table fetch it by name.
class ParameterStore {
 public:
  // Every parameter draws its init values from an rng seeded by
  // (init_seed, name), so the contents do not depend on registration order
  // or on which other parameters exist.
  explicit ParameterStore(std::uint64_t init_seed = 0) : init_seed_(init_seed) {}

  Parameter& add(const std::string& name, std::size_t rows, std::size_t cols,
                 real init_lo = 0, real init_hi = 0) {
    if (by_name_.count(name))
      throw std::runtime_error("parameter already registered: " + name);
    auto p = std::make_unique<Parameter>();
    p->id = params_.size();
    p->name = name;
    p->value = Tensor(rows, cols);
    p->grad = Tensor(rows, cols);
    if (init_lo != init_hi) {
      Rng rng(mix64(init_seed_, name_hash(name)));
      for (auto& v : p->value.flat()) v = rng.uniform(init_lo, init_hi);
    }
    by_name_[name] = p.get();
    params_.push_back(std::move(p));
    return *params_.back();
  }

  bool has(const std::string& name) const { return by_name_.count(name) != 0; }

  Parameter& get(const std::string& name) {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::runtime_error("no such parameter: " + name);
    return *it->second;
  }
  const Parameter& get(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::runtime_error("no such parameter: " + name);
    return *it->second;
  }

  std::size_t count() const { return params_.size(); }
  Parameter& by_id(std::size_t id) { return *params_[id]; }
  const Parameter& by_id(std::size_t id) const { return *params_[id]; }

  // name-sorted view, for deterministic iteration
  std::vector<Parameter*> sorted() {
    std::vector<Parameter*> out;
    out.reserve(params_.size());
    for (auto& [name, p] : by_name_) out.push_back(p);
    return out;
  }
  std::vector<const Parameter*> sorted() const {
    std::vector<const Parameter*> out;
    out.reserve(params_.size());
    for (auto& [name, p] : by_name_) out.push_back(p);
    return out;
  }

  void zero_grads() {
    for (auto& p : params_) p->grad.zero();
  }

  // FNV-1a over the raw value bytes of the name-sorted parameters whose
  // name starts with `prefix` (empty prefix = all).
  std::uint64_t value_hash(const std::string& prefix = "") const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const void* ptr, std::size_t nbytes) {
      const auto* b = static_cast<const unsigned char*>(ptr);
      for (std::size_t i = 0; i < nbytes; ++i) {
        h ^= b[i];
        h *= 0x100000001b3ULL;
      }
    };
    for (const auto& [name, p] : by_name_) {
      if (!prefix.empty() && name.rfind(prefix, 0) != 0) continue;
      feed(name.data(), name.size());
      feed(p->value.data(), p->value.size() * sizeof(real));
    }
    return h;
  }

  static std::uint64_t name_hash(const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  std::uint64_t init_seed_;
  std::vector<std::unique_ptr<Parameter>> params_;
  std::map<std::string, Parameter*> by_name_;
};

// Per-worker gradient buffers, indexed by parameter id.  Workers accumulate
// privately; merge order is fixed by worker index, which keeps batch-parallel
// training deterministic.
class GradArena {
 public:
  explicit GradArena(const ParameterStore& store) {
    grads_.reserve(store.count());
    for (std::size_t i = 0; i < store.count(); ++i) {
      const Tensor& v = store.by_id(i).value;
      grads_.emplace_back(v.rows(), v.cols());
    }
  }

  Tensor& operator[](std::size_t id) { return grads_[id]; }
  const Tensor& operator[](std::size_t id) const { return grads_[id]; }
  Tensor& of(const Parameter& p) { return grads_[p.id]; }

  void zero() {
    for (auto& g : grads_) g.zero();
  }

  // this += other
  void merge(const GradArena& other);

  // flush into the store's grad accumulators
  void add_to(ParameterStore& store) const;

 private:
  std::vector<Tensor> grads_;
};

}  // namespace crex
