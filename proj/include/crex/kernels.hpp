#pragma once

#include <cstddef>
#include <string>

// Dense arithmetic kernels behind the neural core.  Each operation has a
// scalar reference implementation and, on x86-64, an AVX2+FMA variant.
// The backend is chosen once at runtime (cpuid, overridable via the
// CREX_KERNELS environment variable or select_backend), and the two
// implementations are equivalence-tested against each other.

namespace crex::kern {

template <typename T>
struct Ops {
  // reductions
  T (*dot)(std::size_t n, const T* x, const T* y);
  T (*sum)(std::size_t n, const T* x);
  T (*max)(std::size_t n, const T* x);
  // elementwise
  void (*axpy)(std::size_t n, T a, const T* x, T* y);        // y += a*x
  void (*scal)(std::size_t n, T a, T* x);                    // x *= a
  void (*vmul)(std::size_t n, const T* x, const T* y, T* o); // o  = x.*y
  void (*vmac)(std::size_t n, const T* x, const T* y, T* o); // o += x.*y
  // dense linear algebra, A row-major m x n
  void (*gemv)(std::size_t m, std::size_t n, const T* A, const T* x, T* y);   // y += A x
  void (*gemv_t)(std::size_t m, std::size_t n, const T* A, const T* x, T* y); // y += A' x
  void (*ger)(std::size_t m, std::size_t n, T alpha, const T* x, const T* y, T* A); // A += a x y'
  // fused Adam update; c1 = 1/(1-b1^t), c2 = 1/(1-b2^t)
  void (*adam)(std::size_t n, T* p, const T* g, T* m, T* v,
               T lr, T b1, T b2, T c1, T c2, T eps);
};

enum class Backend { scalar, avx2 };

template <typename T>
const Ops<T>& scalar_ops();

// nullptr when the build or host cannot run AVX2
template <typename T>
const Ops<T>* avx2_ops();

// Active table; resolved on first use from cpuid / CREX_KERNELS.
template <typename T>
const Ops<T>& active();

bool select_backend(Backend b);          // false if unsupported on this host
bool select_backend(const std::string& name);  // "scalar" | "avx2"
Backend active_backend();
std::string backend_name();

// convenience forwarders
template <typename T> inline T dot(std::size_t n, const T* x, const T* y) { return active<T>().dot(n, x, y); }
template <typename T> inline T sum(std::size_t n, const T* x) { return active<T>().sum(n, x); }
template <typename T> inline T max(std::size_t n, const T* x) { return active<T>().max(n, x); }
template <typename T> inline void axpy(std::size_t n, T a, const T* x, T* y) { active<T>().axpy(n, a, x, y); }
template <typename T> inline void scal(std::size_t n, T a, T* x) { active<T>().scal(n, a, x); }
template <typename T> inline void vmul(std::size_t n, const T* x, const T* y, T* o) { active<T>().vmul(n, x, y, o); }
template <typename T> inline void vmac(std::size_t n, const T* x, const T* y, T* o) { active<T>().vmac(n, x, y, o); }
template <typename T> inline void gemv(std::size_t m, std::size_t n, const T* A, const T* x, T* y) { active<T>().gemv(m, n, A, x, y); }
template <typename T> inline void gemv_t(std::size_t m, std::size_t n, const T* A, const T* x, T* y) { active<T>().gemv_t(m, n, A, x, y); }
template <typename T> inline void ger(std::size_t m, std::size_t n, T alpha, const T* x, const T* y, T* A) { active<T>().ger(m, n, alpha, x, y, A); }
template <typename T> inline void adam(std::size_t n, T* p, const T* g, T* m, T* v, T lr, T b1, T b2, T c1, T c2, T eps) { active<T>().adam(n, p, g, m, v, lr, b1, b2, c1, c2, eps); }

}  // namespace crex::kern
