#include <cmath>
#include <cstddef>

#include "crex/kernels.hpp"

// Reference kernels.  These define the semantics; the SIMD variants are
// tested against them.

namespace crex::kern {
namespace {

template <typename T>
T dot_(std::size_t n, const T* x, const T* y) {
  T acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

template <typename T>
T sum_(std::size_t n, const T* x) {
  T acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

template <typename T>
T max_(std::size_t n, const T* x) {
  T m = x[0];
  for (std::size_t i = 1; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

template <typename T>
void axpy_(std::size_t n, T a, const T* x, T* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

template <typename T>
void scal_(std::size_t n, T a, T* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

template <typename T>
void vmul_(std::size_t n, const T* x, const T* y, T* o) {
  for (std::size_t i = 0; i < n; ++i) o[i] = x[i] * y[i];
}

template <typename T>
void vmac_(std::size_t n, const T* x, const T* y, T* o) {
  for (std::size_t i = 0; i < n; ++i) o[i] += x[i] * y[i];
}

template <typename T>
void gemv_(std::size_t m, std::size_t n, const T* A, const T* x, T* y) {
  for (std::size_t i = 0; i < m; ++i) {
    const T* row = A + i * n;
    T acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] += acc;
  }
}

template <typename T>
void gemv_t_(std::size_t m, std::size_t n, const T* A, const T* x, T* y) {
  for (std::size_t i = 0; i < m; ++i) {
    const T* row = A + i * n;
    const T xi = x[i];
    for (std::size_t j = 0; j < n; ++j) y[j] += xi * row[j];
  }
}

template <typename T>
void ger_(std::size_t m, std::size_t n, T alpha, const T* x, const T* y, T* A) {
  for (std::size_t i = 0; i < m; ++i) {
    T* row = A + i * n;
    const T axi = alpha * x[i];
    for (std::size_t j = 0; j < n; ++j) row[j] += axi * y[j];
  }
}

template <typename T>
void adam_(std::size_t n, T* p, const T* g, T* m, T* v,
           T lr, T b1, T b2, T c1, T c2, T eps) {
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = b1 * m[i] + (T(1) - b1) * g[i];
    v[i] = b2 * v[i] + (T(1) - b2) * g[i] * g[i];
    const T mhat = m[i] * c1;
    const T vhat = v[i] * c2;
    p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

template <typename T>
constexpr Ops<T> make_table() {
  return Ops<T>{dot_<T>, sum_<T>,  max_<T>,    axpy_<T>, scal_<T>, vmul_<T>,
                vmac_<T>, gemv_<T>, gemv_t_<T>, ger_<T>,  adam_<T>};
}

}  // namespace

template <>
const Ops<double>& scalar_ops<double>() {
  static constexpr Ops<double> t = make_table<double>();
  return t;
}

template <>
const Ops<float>& scalar_ops<float>() {
  static constexpr Ops<float> t = make_table<float>();
  return t;
}

}  // namespace crex::kern
