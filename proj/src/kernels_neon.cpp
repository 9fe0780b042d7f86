// NEON variants (aarch64). The product kernel keeps per-lane gathers scalar since
// NEON has no hardware gather; vector arithmetic still covers the linear ops.

#include "wte/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace wte::kernels {
namespace {

void add_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void scale_neon(const double* a, double s, double* out, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vs));
  for (; i < n; ++i) out[i] = a[i] * s;
}

void axpy_neon(double s, const double* x, double* y, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), vs, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += s * x[i];
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void mul_neon(const MulPlan& plan, const double* a, const double* b, double* out) {
  const std::int32_t* ai = plan.ai.data();
  const std::int32_t* bi = plan.bi.data();
  const std::size_t nk = plan.n_out();
  for (std::size_t k = 0; k < nk; ++k) {
    const std::int32_t s0 = plan.seg[k];
    const std::int32_t s1 = plan.seg[k + 1];
    float64x2_t acc = vdupq_n_f64(0.0);
    std::int32_t t = s0;
    for (; t + 2 <= s1; t += 2) {
      const float64x2_t va = {a[ai[t]], a[ai[t + 1]]};
      const float64x2_t vb = {b[bi[t]], b[bi[t + 1]]};
      acc = vfmaq_f64(acc, va, vb);
    }
    double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; t < s1; ++t) sum += a[ai[t]] * b[bi[t]];
    out[k] = sum;
  }
}

}  // namespace

const Backend& neon_backend() {
  static const Backend backend{"neon",     add_neon, sub_neon, scale_neon,
                               axpy_neon, dot_neon, mul_neon};
  return backend;
}

}  // namespace wte::kernels

#endif  // __aarch64__
