#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wte/errors.hpp"

namespace wte {

/// Truncated multivariate Taylor polynomial in 1..4 variables: the exact-derivative
/// representation behind every geometric quantity in the engine. Coefficients are
/// stored densely in graded-lexicographic order; the coefficient at multi-index
/// alpha equals d^alpha f / alpha! at the expansion point. Arithmetic is exact
/// truncation, so polynomial inputs of total degree <= order are handled exactly
/// up to rounding.
class Jet {
 public:
  Jet() = default;
  Jet(int num_vars, int order);  // zero jet

  static Jet constant(int num_vars, int order, double value);

  int num_vars() const { return num_vars_; }
  int order() const { return order_; }
  double value() const { return coeffs_.empty() ? 0.0 : coeffs_[0]; }

  std::span<const double> coeffs() const { return coeffs_; }
  std::span<double> coeffs() { return coeffs_; }

  /// Coefficient at the given multi-index (size num_vars, |alpha| <= order).
  double coeff(std::span<const int> alpha) const;
  double& coeff(std::span<const int> alpha);
  double coeff(std::initializer_list<int> alpha) const {
    return coeff(std::span<const int>(alpha.begin(), alpha.size()));
  }

  /// The partial derivative d^alpha f at the base point (coefficient times alpha!).
  double derivative(std::span<const int> alpha) const;
  double derivative(std::initializer_list<int> alpha) const {
    return derivative(std::span<const int>(alpha.begin(), alpha.size()));
  }

  Jet truncated(int new_order) const;

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator+=(double rhs);
  Jet& operator-=(double rhs);
  Jet& operator*=(double rhs);

 private:
  int num_vars_ = 0;
  int order_ = 0;
  std::vector<double> coeffs_;

  friend Jet seed_variable(int index, double value, int num_vars, int order);
  friend Jet add(const Jet&, const Jet&);
  friend Jet sub(const Jet&, const Jet&);
  friend Jet mul(const Jet&, const Jet&);
  friend Jet partial(const Jet&, int index);
  friend Jet compose_univariate(std::span<const double> series, const Jet& a);
};

/// Number of coefficients of a jet: C(order + num_vars, num_vars).
int jet_size(int num_vars, int order);

/// Jet of the coordinate function x_index at the given point.
Jet seed_variable(int index, double value, int num_vars, int order);

Jet add(const Jet& a, const Jet& b);
Jet sub(const Jet& a, const Jet& b);
Jet mul(const Jet& a, const Jet& b);

namespace kernels {
struct Backend;
}
/// mul through an explicit kernel backend (used by the equivalence tests).
Jet mul_with(const kernels::Backend& backend, const Jet& a, const Jet& b);

inline Jet operator+(const Jet& a, const Jet& b) { return add(a, b); }
inline Jet operator-(const Jet& a, const Jet& b) { return sub(a, b); }
inline Jet operator*(const Jet& a, const Jet& b) { return mul(a, b); }
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, double s);
inline Jet operator*(double s, const Jet& a) { return a * s; }
Jet operator+(const Jet& a, double s);
inline Jet operator+(double s, const Jet& a) { return a + s; }
Jet operator-(const Jet& a, double s);
Jet operator-(double s, const Jet& a);

/// 1 / a. Throws DegenerateValue when |constant term| is below the singularity
/// floor (1e-13 times the jet's max coefficient magnitude).
Jet reciprocal(const Jet& a);
inline Jet operator/(const Jet& a, const Jet& b) { return mul(a, reciprocal(b)); }
inline Jet operator/(double s, const Jet& b) { return reciprocal(b) * s; }
inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

/// f o a for f given by its univariate Taylor coefficients about a's constant term.
Jet compose_univariate(std::span<const double> series, const Jet& a);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);   // constant term must be > 0
Jet sqrt(const Jet& a);  // constant term must be > 0
Jet pow(const Jet& a, double p);
Jet powi(const Jet& a, int k);  // integer power by repeated multiplication

/// d f / d x_index as a jet of order one less. Throws OrderExhausted on order 0.
Jet partial(const Jet& a, int index);

}  // namespace wte
