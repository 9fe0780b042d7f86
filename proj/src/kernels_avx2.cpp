// AVX2 + FMA variants of the coefficient-array kernels. This translation unit is
// compiled with -mavx2 -mfma; callers must check avx2_supported() before use.

#include "wte/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace wte::kernels {
namespace {

void add_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void scale_avx2(const double* a, double s, double* out, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), vs));
  }
  for (; i < n; ++i) out[i] = a[i] * s;
}

void axpy_avx2(double s, const double* x, double* y, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += s * x[i];
}

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return hsum(acc) + tail;
}

void mul_avx2(const MulPlan& plan, const double* a, const double* b, double* out) {
  const std::int32_t* ai = plan.ai.data();
  const std::int32_t* bi = plan.bi.data();
  const std::size_t nk = plan.n_out();
  for (std::size_t k = 0; k < nk; ++k) {
    const std::int32_t s0 = plan.seg[k];
    const std::int32_t s1 = plan.seg[k + 1];
    __m256d acc = _mm256_setzero_pd();
    std::int32_t t = s0;
    for (; t + 4 <= s1; t += 4) {
      const __m128i via = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ai + t));
      const __m128i vib = _mm_loadu_si128(reinterpret_cast<const __m128i*>(bi + t));
      const __m256d va = _mm256_i32gather_pd(a, via, 8);
      const __m256d vb = _mm256_i32gather_pd(b, vib, 8);
      acc = _mm256_fmadd_pd(va, vb, acc);
    }
    double sum = hsum(acc);
    for (; t < s1; ++t) sum += a[ai[t]] * b[bi[t]];
    out[k] = sum;
  }
}

}  // namespace

bool avx2_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const Backend& avx2_backend() {
  static const Backend backend{"avx2",     add_avx2, sub_avx2, scale_avx2,
                               axpy_avx2, dot_avx2, mul_avx2};
  return backend;
}

}  // namespace wte::kernels

#endif  // x86_64
