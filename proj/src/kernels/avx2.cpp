#include "crex/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

// AVX2+FMA variants.  This translation unit is compiled with -mavx2 -mfma;
// nothing here may run unless dispatch confirmed cpu support.

namespace crex::kern {
namespace {

// ---------------------------------------------------------------- double --

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_d(std::size_t n, const double* x, const double* y) {
  __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
  }
  for (; i + 4 <= n; i += 4)
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sum_d(std::size_t n, const double* x) {
  __m256d a = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) a = _mm256_add_pd(a, _mm256_loadu_pd(x + i));
  double acc = hsum(a);
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double max_d(std::size_t n, const double* x) {
  std::size_t i = 0;
  double m = x[0];
  if (n >= 4) {
    __m256d vm = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, _mm256_loadu_pd(x + i));
    __m128d lo = _mm_max_pd(_mm256_castpd256_pd128(vm), _mm256_extractf128_pd(vm, 1));
    m = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
  }
  for (; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

void axpy_d(std::size_t n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scal_d(std::size_t n, double a, double* x) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void vmul_d(std::size_t n, const double* x, const double* y, double* o) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(o + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) o[i] = x[i] * y[i];
}

void vmac_d(std::size_t n, const double* x, const double* y, double* o) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(o + i, _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), _mm256_loadu_pd(o + i)));
  for (; i < n; ++i) o[i] += x[i] * y[i];
}

void gemv_d(std::size_t m, std::size_t n, const double* A, const double* x, double* y) {
  for (std::size_t i = 0; i < m; ++i) y[i] += dot_d(n, A + i * n, x);
}

void gemv_t_d(std::size_t m, std::size_t n, const double* A, const double* x, double* y) {
  for (std::size_t i = 0; i < m; ++i) axpy_d(n, x[i], A + i * n, y);
}

void ger_d(std::size_t m, std::size_t n, double alpha, const double* x, const double* y, double* A) {
  for (std::size_t i = 0; i < m; ++i) axpy_d(n, alpha * x[i], y, A + i * n);
}

void adam_d(std::size_t n, double* p, const double* g, double* m, double* v,
            double lr, double b1, double b2, double c1, double c2, double eps) {
  const __m256d vb1 = _mm256_set1_pd(b1), vs1 = _mm256_set1_pd(1.0 - b1);
  const __m256d vb2 = _mm256_set1_pd(b2), vs2 = _mm256_set1_pd(1.0 - b2);
  const __m256d vc1 = _mm256_set1_pd(c1), vc2 = _mm256_set1_pd(c2);
  const __m256d vlr = _mm256_set1_pd(lr), veps = _mm256_set1_pd(eps);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gi = _mm256_loadu_pd(g + i);
    __m256d mi = _mm256_fmadd_pd(vs1, gi, _mm256_mul_pd(vb1, _mm256_loadu_pd(m + i)));
    __m256d vi = _mm256_fmadd_pd(vs2, _mm256_mul_pd(gi, gi),
                                 _mm256_mul_pd(vb2, _mm256_loadu_pd(v + i)));
    _mm256_storeu_pd(m + i, mi);
    _mm256_storeu_pd(v + i, vi);
    const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(_mm256_mul_pd(vi, vc2)), veps);
    const __m256d step = _mm256_div_pd(_mm256_mul_pd(vlr, _mm256_mul_pd(mi, vc1)), denom);
    _mm256_storeu_pd(p + i, _mm256_sub_pd(_mm256_loadu_pd(p + i), step));
  }
  for (; i < n; ++i) {
    m[i] = b1 * m[i] + (1.0 - b1) * g[i];
    v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
    p[i] -= lr * (m[i] * c1) / (std::sqrt(v[i] * c2) + eps);
  }
}

// ----------------------------------------------------------------- float --

inline float hsum(__m256 v) {
  __m128 lo = _mm_add_ps(_mm256_castps256_ps128(v), _mm256_extractf128_ps(v, 1));
  lo = _mm_add_ps(lo, _mm_movehl_ps(lo, lo));
  lo = _mm_add_ss(lo, _mm_shuffle_ps(lo, lo, 0x55));
  return _mm_cvtss_f32(lo);
}

float dot_f(std::size_t n, const float* x, const float* y) {
  __m256 a0 = _mm256_setzero_ps(), a1 = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    a0 = _mm256_fmadd_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i), a0);
    a1 = _mm256_fmadd_ps(_mm256_loadu_ps(x + i + 8), _mm256_loadu_ps(y + i + 8), a1);
  }
  for (; i + 8 <= n; i += 8)
    a0 = _mm256_fmadd_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i), a0);
  float acc = hsum(_mm256_add_ps(a0, a1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

float sum_f(std::size_t n, const float* x) {
  __m256 a = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) a = _mm256_add_ps(a, _mm256_loadu_ps(x + i));
  float acc = hsum(a);
  for (; i < n; ++i) acc += x[i];
  return acc;
}

float max_f(std::size_t n, const float* x) {
  std::size_t i = 0;
  float m = x[0];
  if (n >= 8) {
    __m256 vm = _mm256_loadu_ps(x);
    for (i = 8; i + 8 <= n; i += 8) vm = _mm256_max_ps(vm, _mm256_loadu_ps(x + i));
    __m128 lo = _mm_max_ps(_mm256_castps256_ps128(vm), _mm256_extractf128_ps(vm, 1));
    lo = _mm_max_ps(lo, _mm_movehl_ps(lo, lo));
    lo = _mm_max_ss(lo, _mm_shuffle_ps(lo, lo, 0x55));
    m = _mm_cvtss_f32(lo);
  }
  for (; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

void axpy_f(std::size_t n, float a, const float* x, float* y) {
  const __m256 va = _mm256_set1_ps(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(y + i, _mm256_fmadd_ps(va, _mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scal_f(std::size_t n, float a, float* x) {
  const __m256 va = _mm256_set1_ps(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(x + i, _mm256_mul_ps(va, _mm256_loadu_ps(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void vmul_f(std::size_t n, const float* x, const float* y, float* o) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(o + i, _mm256_mul_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i)));
  for (; i < n; ++i) o[i] = x[i] * y[i];
}

void vmac_f(std::size_t n, const float* x, const float* y, float* o) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(o + i, _mm256_fmadd_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i), _mm256_loadu_ps(o + i)));
  for (; i < n; ++i) o[i] += x[i] * y[i];
}

void gemv_f(std::size_t m, std::size_t n, const float* A, const float* x, float* y) {
  for (std::size_t i = 0; i < m; ++i) y[i] += dot_f(n, A + i * n, x);
}

void gemv_t_f(std::size_t m, std::size_t n, const float* A, const float* x, float* y) {
  for (std::size_t i = 0; i < m; ++i) axpy_f(n, x[i], A + i * n, y);
}

void ger_f(std::size_t m, std::size_t n, float alpha, const float* x, const float* y, float* A) {
  for (std::size_t i = 0; i < m; ++i) axpy_f(n, alpha * x[i], y, A + i * n);
}

void adam_f(std::size_t n, float* p, const float* g, float* m, float* v,
            float lr, float b1, float b2, float c1, float c2, float eps) {
  const __m256 vb1 = _mm256_set1_ps(b1), vs1 = _mm256_set1_ps(1.0f - b1);
  const __m256 vb2 = _mm256_set1_ps(b2), vs2 = _mm256_set1_ps(1.0f - b2);
  const __m256 vc1 = _mm256_set1_ps(c1), vc2 = _mm256_set1_ps(c2);
  const __m256 vlr = _mm256_set1_ps(lr), veps = _mm256_set1_ps(eps);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 gi = _mm256_loadu_ps(g + i);
    __m256 mi = _mm256_fmadd_ps(vs1, gi, _mm256_mul_ps(vb1, _mm256_loadu_ps(m + i)));
    __m256 vi = _mm256_fmadd_ps(vs2, _mm256_mul_ps(gi, gi),
                                _mm256_mul_ps(vb2, _mm256_loadu_ps(v + i)));
    _mm256_storeu_ps(m + i, mi);
    _mm256_storeu_ps(v + i, vi);
    const __m256 denom = _mm256_add_ps(_mm256_sqrt_ps(_mm256_mul_ps(vi, vc2)), veps);
    const __m256 step = _mm256_div_ps(_mm256_mul_ps(vlr, _mm256_mul_ps(mi, vc1)), denom);
    _mm256_storeu_ps(p + i, _mm256_sub_ps(_mm256_loadu_ps(p + i), step));
  }
  for (; i < n; ++i) {
    m[i] = b1 * m[i] + (1.0f - b1) * g[i];
    v[i] = b2 * v[i] + (1.0f - b2) * g[i] * g[i];
    p[i] -= lr * (m[i] * c1) / (std::sqrt(v[i] * c2) + eps);
  }
}

}  // namespace

template <>
const Ops<double>* avx2_ops<double>() {
  static constexpr Ops<double> t{dot_d, sum_d,  max_d,    axpy_d, scal_d, vmul_d,
                                 vmac_d, gemv_d, gemv_t_d, ger_d,  adam_d};
  return &t;
}

template <>
const Ops<float>* avx2_ops<float>() {
  static constexpr Ops<float> t{dot_f, sum_f,  max_f,    axpy_f, scal_f, vmul_f,
                                vmac_f, gemv_f, gemv_t_f, ger_f,  adam_f};
  return &t;
}

}  // namespace crex::kern

#else  // non-x86 builds fall back to the scalar table

namespace crex::kern {
template <>
const Ops<double>* avx2_ops<double>() { return nullptr; }
template <>
const Ops<float>* avx2_ops<float>() { return nullptr; }
}  // namespace crex::kern

#endif
