#include "wte/kernels.hpp"

namespace wte::kernels {
namespace {

void add_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void scale_scalar(const double* a, double s, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * s;
}

void axpy_scalar(double s, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += s * x[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void mul_scalar(const MulPlan& plan, const double* a, const double* b, double* out) {
  const std::int32_t* ai = plan.ai.data();
  const std::int32_t* bi = plan.bi.data();
  const std::size_t nk = plan.n_out();
  for (std::size_t k = 0; k < nk; ++k) {
    double acc = 0.0;
    for (std::int32_t t = plan.seg[k]; t < plan.seg[k + 1]; ++t) acc += a[ai[t]] * b[bi[t]];
    out[k] = acc;
  }
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar",     add_scalar, sub_scalar, scale_scalar,
                               axpy_scalar, dot_scalar, mul_scalar};
  return backend;
}

}  // namespace wte::kernels
