#pragma once

// Test-only oracles, independent of the jet implementation path:
//  - dense multivariate polynomials with symbolic differentiation
//  - Richardson-extrapolated central finite differences for mixed partials

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "wte/jet.hpp"
#include "wte/rng.hpp"

namespace wte::test {

/// Sparse multivariate polynomial, exponents stored explicitly.
struct Poly {
  int nv = 2;
  std::map<std::array<int, 4>, double> terms;

  double eval(const std::vector<double>& x) const {
    double s = 0.0;
    for (const auto& [a, c] : terms) {
      double m = c;
      for (int v = 0; v < nv; ++v) m *= std::pow(x[v], a[v]);
      s += m;
    }
    return s;
  }

  Poly derivative(int dir) const {
    Poly d;
    d.nv = nv;
    for (const auto& [a, c] : terms) {
      if (a[dir] == 0) continue;
      auto b = a;
      b[dir] -= 1;
      d.terms[b] += c * a[dir];
    }
    return d;
  }

  Poly times(const Poly& o) const {
    Poly p;
    p.nv = nv;
    for (const auto& [a, ca] : terms) {
      for (const auto& [b, cb] : o.terms) {
        std::array<int, 4> s{};
        for (int v = 0; v < 4; ++v) s[v] = a[v] + b[v];
        p.terms[s] += ca * cb;
      }
    }
    return p;
  }

  Poly plus(const Poly& o) const {
    Poly p = *this;
    for (const auto& [b, cb] : o.terms) p.terms[b] += cb;
    return p;
  }

  static Poly random(int nv, int degree, Rng& rng) {
    Poly p;
    p.nv = nv;
    std::array<int, 4> a{};
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
      if (slot == nv) {
        p.terms[a] = rng.uniform(-1.0, 1.0);
        return;
      }
      for (int e = 0; e <= remaining; ++e) {
        a[slot] = e;
        rec(slot + 1, remaining - e);
      }
      a[slot] = 0;
    };
    rec(0, degree);
    return p;
  }

  Jet to_jet(const std::vector<double>& x, int order) const {
    std::vector<Jet> seeds;
    for (int v = 0; v < nv; ++v) seeds.push_back(seed_variable(v, x[v], nv, order));
    Jet acc = Jet::constant(nv, order, 0.0);
    for (const auto& [a, c] : terms) {
      Jet m = Jet::constant(nv, order, c);
      for (int v = 0; v < nv; ++v) {
        for (int e = 0; e < a[v]; ++e) m = m * seeds[v];
      }
      acc += m;
    }
    return acc;
  }
};

/// Central finite difference of one mixed partial d^alpha f at x, built by nesting
/// 4th-order 5-point first-derivative stencils, plus one Richardson level on top.
inline double fd_partial(const std::function<double(const std::vector<double>&)>& f,
                         std::vector<double> x, const std::vector<int>& alpha, double h) {
  for (std::size_t v = 0; v < alpha.size(); ++v) {
    if (alpha[v] == 0) continue;
    auto lower = alpha;
    lower[v] -= 1;
    auto shifted = [&](double d) {
      auto y = x;
      y[v] += d;
      return fd_partial(f, y, lower, h);
    };
    return (-shifted(2 * h) + 8 * shifted(h) - 8 * shifted(-h) + shifted(-2 * h)) / (12.0 * h);
  }
  return f(x);
}

inline double fd_partial_richardson(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x, const std::vector<int>& alpha,
                                    double h) {
  const double d1 = fd_partial(f, x, alpha, h);
  const double d2 = fd_partial(f, x, alpha, h / 2.0);
  const double d3 = fd_partial(f, x, alpha, h / 4.0);
  const double r1 = (16.0 * d2 - d1) / 15.0;
  const double r2 = (16.0 * d3 - d2) / 15.0;
  return (64.0 * r2 - r1) / 63.0;
}

}  // namespace wte::test
