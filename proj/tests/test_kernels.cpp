#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wte/jet.hpp"
#include "wte/kernels.hpp"
#include "wte/rng.hpp"

using namespace wte;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-10.0, 10.0);
  return v;
}

// All SIMD backends must agree with the scalar reference within a few ulp.
void check_backend(const kernels::Backend& b) {
  const auto& ref = kernels::scalar_backend();
  Rng rng(2024);
  for (std::size_t n : {1u, 3u, 4u, 7u, 16u, 70u, 495u, 497u}) {
    auto a = random_vec(rng, n);
    auto c = random_vec(rng, n);
    std::vector<double> r0(n), r1(n);

    ref.add(a.data(), c.data(), r0.data(), n);
    b.add(a.data(), c.data(), r1.data(), n);
    CHECK(r0 == r1);

    ref.sub(a.data(), c.data(), r0.data(), n);
    b.sub(a.data(), c.data(), r1.data(), n);
    CHECK(r0 == r1);

    ref.scale(a.data(), 1.7, r0.data(), n);
    b.scale(a.data(), 1.7, r1.data(), n);
    CHECK(r0 == r1);

    r0 = c;
    r1 = c;
    ref.axpy(-0.3, a.data(), r0.data(), n);
    b.axpy(-0.3, a.data(), r1.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(r0[i] == doctest::Approx(r1[i]).epsilon(1e-15));
    }

    const double d0 = ref.dot(a.data(), c.data(), n);
    const double d1 = b.dot(a.data(), c.data(), n);
    CHECK(d0 == doctest::Approx(d1).epsilon(1e-13));
  }
}

void check_backend_mul(const kernels::Backend& b) {
  // drive through the jet layer so a real MulPlan is exercised
  Rng rng(99);
  for (int nv : {1, 2, 4}) {
    for (int order : {0, 1, 3, nv == 4 ? 8 : 6}) {
      const int n = jet_size(nv, order);
      Jet x(nv, order), y(nv, order);
      for (int i = 0; i < n; ++i) {
        x.coeffs()[i] = rng.uniform(-2.0, 2.0);
        y.coeffs()[i] = rng.uniform(-2.0, 2.0);
      }
      Jet ref = mul_with(kernels::scalar_backend(), x, y);
      Jet got = mul_with(b, x, y);
      for (int i = 0; i < n; ++i) {
        CHECK(ref.coeffs()[i] == doctest::Approx(got.coeffs()[i]).epsilon(1e-13));
      }
    }
  }
}

}  // namespace

TEST_CASE("active backend reports a name") {
  CHECK(kernels::active().name != nullptr);
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 backend agrees with the scalar reference") {
  if (!kernels::avx2_supported()) return;
  check_backend(kernels::avx2_backend());
  check_backend_mul(kernels::avx2_backend());
}
#endif

#if defined(__aarch64__)
TEST_CASE("neon backend agrees with the scalar reference") {
  check_backend(kernels::neon_backend());
  check_backend_mul(kernels::neon_backend());
}
#endif

TEST_CASE("scalar backend self-consistency on product plans") {
  check_backend_mul(kernels::scalar_backend());
}
