#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>

#include "wte/tensor.hpp"

namespace wte {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
};

/// Analytic immersion Phi of an n-dimensional parameter box into R^m,
/// evaluated on jets so every partial derivative is exact.
struct ImmersionChart {
  std::string name;
  int n = 0;
  int m = 0;
  std::array<Interval, 4> domain{};
  std::array<bool, 4> periodic{};
  /// Fraction of each non-periodic interval excluded from pointwise sampling.
  std::array<double, 4> margin{};
  std::function<std::vector<Jet>(std::span<const Jet>)> eval;

  std::vector<Jet> eval_at(std::span<const double> point, int order) const;
};

/// Pointwise Riemannian apparatus of an immersion, all quantities carried as jets.
/// Orders: phi at K, dphi/g/ginv/sqrtg at K-1, gamma/h/H/h0 at K-2.
struct GeometryFrame {
  const ImmersionChart* chart = nullptr;
  std::array<double, 4> point{};
  int n = 0;
  int m = 0;
  int order = 0;
  int residual_order = 0;  // order - 2, what h-level consumers can still spend

  JetVec phi;            // m components
  Ten<JetVec> dphi;      // rank 1: dphi.at(i) = d_i Phi
  Ten<Jet> g, ginv;      // rank 2
  Jet detg, sqrtg;
  Ten<Jet> gamma;        // rank 3: gamma.at(k,i,j) = Gamma^k_ij
  Ten<JetVec> ddphi;     // rank 2: plain second partials
  Ten<JetVec> h, h0;     // rank 2: second fundamental form and trace-free part
  JetVec H;              // mean curvature vector (1/n) g^{ij} h_ij

  Jet gup(int i, int j) const { return ginv.at(i, j); }
};

/// Build the frame at an interior point. Throws DegenerateMetric when the Gram
/// matrix of the tangents is numerically rank-deficient, OrderExhausted for
/// order < 2.
GeometryFrame frame(const ImmersionChart& chart, std::span<const double> point, int order);

JetVec project_tangent(const GeometryFrame& f, const JetVec& v);
JetVec project_normal(const GeometryFrame& f, const JetVec& v);

/// Covariant derivative of an ambient-valued (or scalar, or bivector-valued)
/// tensor with all indices down; the new derivative index comes first.
Ten<Jet> covariant_derivative(const GeometryFrame& f, const Ten<Jet>& t);
Ten<JetVec> covariant_derivative(const GeometryFrame& f, const Ten<JetVec>& t);

/// Laplace-Beltrami of a scalar jet field: g^{ij}(d_i d_j f - Gamma^k_ij d_k f).
Jet laplace_beltrami(const GeometryFrame& f, const Jet& fld);

/// Componentwise Laplace-Beltrami of an ambient-valued field.
JetVec laplace_beltrami(const GeometryFrame& f, const JetVec& fld);

/// Connection Laplacian of the normal bundle: pi_n grad^i (pi_n grad_i B).
/// Throws NotNormal when B has a tangential part above tol * (|B| + 1).
JetVec normal_laplacian(const GeometryFrame& f, const JetVec& b, double tol = 1e-6);

/// g^{ij} t_ij for scalar rank-2 tensors.
Jet trace_g(const GeometryFrame& f, const Ten<Jet>& t);
JetVec trace_g(const GeometryFrame& f, const Ten<JetVec>& t);

/// Value-level helpers.
std::vector<double> values(const JetVec& v);
double norm_value(const JetVec& v);

/// Deterministic codimension-1 unit normal: pi_n(e_a)/|pi_n(e_a)| for the ambient
/// basis vector with the largest normal part (ties broken by lowest index).
JetVec unit_normal_codim1(const GeometryFrame& f);

}  // namespace wte
