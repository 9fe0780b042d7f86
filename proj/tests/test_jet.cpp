#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wte/jet.hpp"
#include "wte/kernels.hpp"
#include "wte/rng.hpp"

using namespace wte;
using test::Poly;

TEST_CASE("seed jets match their definition") {
  Jet x = seed_variable(0, 2.0, 2, 2);
  CHECK(x.value() == 2.0);
  CHECK(x.coeff({1, 0}) == 1.0);
  CHECK(x.coeff({0, 1}) == 0.0);
  CHECK(x.coeff({0, 2}) == 0.0);
  CHECK(x.coeff({2, 0}) == 0.0);

  Jet y = seed_variable(1, 0.0, 2, 1);
  CHECK(y.value() == 0.0);
  CHECK(y.coeff({0, 1}) == 1.0);
  CHECK(y.coeff({1, 0}) == 0.0);

  CHECK(jet_size(2, 2) == 6);
  CHECK(jet_size(4, 8) == 495);
}

TEST_CASE("product of seeds x*y at (2,3)") {
  Jet x = seed_variable(0, 2.0, 2, 2);
  Jet y = seed_variable(1, 3.0, 2, 2);
  Jet p = x * y;
  CHECK(p.value() == doctest::Approx(6.0));
  CHECK(p.coeff({1, 0}) == doctest::Approx(3.0));
  CHECK(p.coeff({0, 1}) == doctest::Approx(2.0));
  CHECK(p.coeff({1, 1}) == doctest::Approx(1.0));
  CHECK(p.coeff({2, 0}) == doctest::Approx(0.0));
}

TEST_CASE("x^2 jet and its partial") {
  Jet x = seed_variable(0, 3.0, 2, 2);
  Jet sq = x * x;
  CHECK(sq.value() == doctest::Approx(9.0));
  CHECK(sq.coeff({1, 0}) == doctest::Approx(6.0));
  CHECK(sq.coeff({2, 0}) == doctest::Approx(1.0));

  Jet d = partial(sq, 0);
  CHECK(d.order() == 1);
  CHECK(d.value() == doctest::Approx(6.0));
  CHECK(d.coeff({1, 0}) == doctest::Approx(2.0));
}

TEST_CASE("reciprocal basics") {
  Jet c4 = Jet::constant(2, 3, 4.0);
  Jet r = reciprocal(c4);
  CHECK(r.value() == doctest::Approx(0.25));
  CHECK(r.coeff({1, 0}) == 0.0);

  // 1/(1+x) at 0: geometric series 1, -1, 1, -1
  Jet x = seed_variable(0, 0.0, 1, 3);
  Jet g = reciprocal(x + 1.0);
  CHECK(g.coeff({0}) == doctest::Approx(1.0));
  CHECK(g.coeff({1}) == doctest::Approx(-1.0));
  CHECK(g.coeff({2}) == doctest::Approx(1.0));
  CHECK(g.coeff({3}) == doctest::Approx(-1.0));

  CHECK_THROWS_AS(reciprocal(seed_variable(0, 0.0, 2, 2)), DegenerateValue);
}

TEST_CASE("elementary wrappers: printed Taylor values") {
  Jet x = seed_variable(0, 0.0, 1, 3);
  Jet s = sin(x);
  CHECK(s.coeff({0}) == doctest::Approx(0.0));
  CHECK(s.coeff({1}) == doctest::Approx(1.0));
  CHECK(s.coeff({2}) == doctest::Approx(0.0));
  CHECK(s.coeff({3}) == doctest::Approx(-1.0 / 6.0));

  Jet c9 = Jet::constant(2, 2, 9.0);
  Jet r = sqrt(c9);
  CHECK(r.value() == doctest::Approx(3.0));
  CHECK(r.coeff({1, 0}) == 0.0);

  Jet d = partial(sin(seed_variable(0, 0.0, 2, 4)), 0);
  CHECK(d.value() == doctest::Approx(1.0));

  CHECK_THROWS_AS(sqrt(Jet::constant(1, 2, -1.0)), DomainError);
  CHECK_THROWS_AS(log(Jet::constant(1, 2, 0.0)), DomainError);
  CHECK_THROWS_AS(pow(Jet::constant(1, 2, -2.0), 0.5), DomainError);
  CHECK_THROWS_AS(partial(Jet::constant(2, 0, 1.0), 0), OrderExhausted);
}

TEST_CASE("exp(x+y) jet coefficients vs finite differences") {
  auto f = [](const std::vector<double>& v) { return std::exp(v[0] + v[1]); };
  Jet x = seed_variable(0, 0.0, 2, 2);
  Jet y = seed_variable(1, 0.0, 2, 2);
  Jet e = exp(x + y);
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; i + j <= 2; ++j) {
      const double fd = test::fd_partial_richardson(f, {0.0, 0.0}, {i, j}, 1e-3);
      const int a[2] = {i, j};
      CHECK(e.derivative(std::span<const int>(a, 2)) == doctest::Approx(fd).epsilon(1e-9));
    }
  }
}

TEST_CASE("elementary wrappers vs finite-difference oracle at random points") {
  Rng rng(1234);
  struct Case {
    const char* name;
    std::function<Jet(const Jet&)> jf;
    std::function<double(double)> f;
    double lo, hi;
  };
  const Case cases[] = {
      {"sin", [](const Jet& a) { return sin(a); }, [](double t) { return std::sin(t); }, -2.0, 2.0},
      {"cos", [](const Jet& a) { return cos(a); }, [](double t) { return std::cos(t); }, -2.0, 2.0},
      {"exp", [](const Jet& a) { return exp(a); }, [](double t) { return std::exp(t); }, -1.0, 1.0},
      {"log", [](const Jet& a) { return log(a); }, [](double t) { return std::log(t); }, 0.5, 3.0},
      {"sqrt", [](const Jet& a) { return sqrt(a); }, [](double t) { return std::sqrt(t); }, 0.5, 3.0},
      {"pow1.7", [](const Jet& a) { return pow(a, 1.7); },
       [](double t) { return std::pow(t, 1.7); }, 0.5, 3.0},
  };
  for (const auto& tc : cases) {
    CAPTURE(tc.name);
    for (int rep = 0; rep < 4; ++rep) {
      const double x0 = rng.uniform(tc.lo, tc.hi);
      const double y0 = rng.uniform(tc.lo, tc.hi);
      // compose with the 2-variable argument u = x*y (keeps arguments in range)
      auto fxy = [&](const std::vector<double>& v) { return tc.f(v[0] * v[1] / 2.0 + v[0]); };
      Jet u = seed_variable(0, x0, 2, 3) * seed_variable(1, y0, 2, 3) * 0.5 +
              seed_variable(0, x0, 2, 3);
      if (u.value() <= 0.05 && tc.lo > 0.0) continue;
      Jet jet = tc.jf(u);
      for (int i = 0; i <= 3; ++i) {
        for (int j = 0; i + j <= 3; ++j) {
          const double fd = test::fd_partial_richardson(fxy, {x0, y0}, {i, j}, 5e-2);
          const int a[2] = {i, j};
          const double got = jet.derivative(std::span<const int>(a, 2));
          CHECK(got == doctest::Approx(fd).epsilon(1e-7));
        }
      }
    }
  }
}

TEST_CASE("ring axioms hold exactly on random polynomials within order budget") {
  Rng rng(42);
  for (int nv : {2, 4}) {
    const int order = nv == 2 ? 6 : 5;
    for (int rep = 0; rep < 3; ++rep) {
      Poly pa = Poly::random(nv, 2, rng);
      Poly pb = Poly::random(nv, 2, rng);
      Poly pc = Poly::random(nv, 1, rng);
      std::vector<double> x;
      for (int v = 0; v < nv; ++v) x.push_back(rng.uniform(-1.0, 1.0));

      Jet a = pa.to_jet(x, order), b = pb.to_jet(x, order), c = pc.to_jet(x, order);

      // associativity / commutativity / distributivity, coefficientwise
      Jet lhs = (a * b) * c;
      Jet rhs = a * (b * c);
      for (std::size_t i = 0; i < lhs.coeffs().size(); ++i) {
        CHECK(lhs.coeffs()[i] == doctest::Approx(rhs.coeffs()[i]).epsilon(1e-12));
      }
      Jet ab = a * b, ba = b * a;
      for (std::size_t i = 0; i < ab.coeffs().size(); ++i) {
        CHECK(ab.coeffs()[i] == doctest::Approx(ba.coeffs()[i]).epsilon(1e-12));
      }
      Jet d1 = a * (b + c), d2 = a * b + a * c;
      for (std::size_t i = 0; i < d1.coeffs().size(); ++i) {
        CHECK(d1.coeffs()[i] == doctest::Approx(d2.coeffs()[i]).epsilon(1e-12));
      }

      // the jet of a product of polynomials is the jet of the symbolic product
      Poly pab = pa.times(pb);
      Jet sym = pab.to_jet(x, order);
      for (std::size_t i = 0; i < ab.coeffs().size(); ++i) {
        CHECK(ab.coeffs()[i] == doctest::Approx(sym.coeffs()[i]).epsilon(5e-12));
      }
    }
  }
}

TEST_CASE("partial obeys the Leibniz rule and matches symbolic polynomial derivatives") {
  Rng rng(7);
  const int nv = 2, order = 6;
  Poly pa = Poly::random(nv, 5, rng);
  Poly pb = Poly::random(nv, 3, rng);
  std::vector<double> x = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  Jet a = pa.to_jet(x, order), b = pb.to_jet(x, order);

  for (int dir = 0; dir < nv; ++dir) {
    Jet sym = pa.derivative(dir).to_jet(x, order - 1);
    Jet jd = partial(a, dir);
    for (std::size_t i = 0; i < jd.coeffs().size(); ++i) {
      CHECK(jd.coeffs()[i] == doctest::Approx(sym.coeffs()[i]).epsilon(1e-11));
    }

    Jet lhs = partial(a * b, dir);
    Jet rhs = partial(a, dir) * b.truncated(order - 1) + a.truncated(order - 1) * partial(b, dir);
    for (std::size_t i = 0; i < lhs.coeffs().size(); ++i) {
      CHECK(lhs.coeffs()[i] == doctest::Approx(rhs.coeffs()[i]).epsilon(1e-11));
    }
  }
}

TEST_CASE("truncation closure: higher-order content never leaks into low-order results") {
  // same computation at order K and order K+2 must agree on the first K orders
  Rng rng(11);
  Poly pa = Poly::random(4, 3, rng);
  std::vector<double> x = {0.3, -0.2, 0.1, 0.4};
  Jet lo = pa.to_jet(x, 4);
  Jet hi = pa.to_jet(x, 6);
  Jet flo = sin(lo) * exp(lo * 0.25);
  Jet fhi = sin(hi) * exp(hi * 0.25);
  Jet fhi_trunc = fhi.truncated(4);
  for (std::size_t i = 0; i < flo.coeffs().size(); ++i) {
    CHECK(flo.coeffs()[i] == doctest::Approx(fhi_trunc.coeffs()[i]).epsilon(1e-12));
  }
}
