#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wte::kernels {

/// Precomputed index plan for one truncated polynomial product:
/// out[k] = sum over t in [seg[k], seg[k+1]) of a[ai[t]] * b[bi[t]].
/// Segments are contiguous and ordered by output coefficient, so any backend
/// that follows the plan produces the same sum up to rounding mode of its FMA use.
struct MulPlan {
  std::vector<std::int32_t> ai;
  std::vector<std::int32_t> bi;
  std::vector<std::int32_t> seg;  // size = n_out + 1
  std::size_t n_out() const { return seg.empty() ? 0 : seg.size() - 1; }
};

/// One set of coefficient-array primitives. The scalar backend is the reference;
/// SIMD backends must agree with it within a few ulp (equivalence-tested).
struct Backend {
  const char* name;
  void (*add)(const double* a, const double* b, double* out, std::size_t n);
  void (*sub)(const double* a, const double* b, double* out, std::size_t n);
  void (*scale)(const double* a, double s, double* out, std::size_t n);
  void (*axpy)(double s, const double* x, double* y, std::size_t n);  // y += s*x
  double (*dot)(const double* a, const double* b, std::size_t n);
  void (*mul)(const MulPlan& plan, const double* a, const double* b, double* out);
};

const Backend& scalar_backend();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
const Backend& avx2_backend();
#endif
#if defined(__aarch64__)
const Backend& neon_backend();
#endif

/// Runtime-selected backend. Honors WTE_KERNEL=scalar|avx2|neon when set.
const Backend& active();

}  // namespace wte::kernels
