#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wte/chart.hpp"

namespace wte {

/// Closed-form data attached to a reference shape, used as test oracles.
struct ShapeReference {
  std::optional<double> abs_H;    // |H| pointwise
  std::optional<double> h2;       // |h|^2 pointwise
  std::optional<double> energy;   // E (4D) or int |H|^2 (2D)
  std::optional<int> chi;         // Euler characteristic (2D)
  bool critical = false;          // claimed critical point of the 4D energy
};

struct ZooShape {
  std::string name;
  ImmersionChart chart;
  ShapeReference ref;
};

/// Round S^4(r) in R^5, double-polar angle chart.
ZooShape make_s4(double r);

/// Round S^2(r) in R^3, polar chart.
ZooShape make_sphere2(double r);

/// Torus of revolution in R^3, R > a > 0.
ZooShape make_torus2(double R, double a);

/// Stereographic image of the Clifford torus: torus of revolution with R/a = sqrt(2).
ZooShape make_clifford_torus_stereo();

/// Product of round spheres, factor dims summing to 4, in R^{sum(d_i + 1)}.
ZooShape make_product_spheres(const std::vector<std::pair<int, double>>& factors);

/// Totally geodesic periodic plane chart (n-plane sitting in R^m).
ZooShape make_flat_plane(int n, int m);

/// Seeded periodic graph chart Phi(x) = (x, eps f_1(x), ..., eps f_{m-n}(x)) with
/// trigonometric polynomials f. Identity workhorse; not a closed immersion.
ZooShape make_graph_chart(int n, int m, double amplitude, std::uint64_t seed);

/// Rotational minimal hypersurface in R^5: Phi(t, omega) = (f(t) omega, t), omega in S^3,
/// profile solving f'' = 3(1 + f'^2)/f, f(0) = 1, f'(0) = 0.
ZooShape make_catenoid4(double t_extent);

/// Closed seeded shapes for tests that integrate by parts over a closed manifold:
/// a round shape composed with a small ambient polynomial displacement.
ZooShape make_bumpy_s4(double eps, std::uint64_t seed);
ZooShape make_bumpy_s1s3(double eps, std::uint64_t seed);  // codimension 2 in R^6

/// Maximal catenoid profile half-width before the profile blows up.
double catenoid4_max_extent();

/// Generalized profile solver f'' = c (1 + f'^2)/f, f(0)=f0, f'(0)=0, evaluated as a
/// jet in the first variable of `t`. Exposed for the 2D catenoid cross-check.
Jet catenoid_profile_jet(double c, double f0, const Jet& t);

struct ShapeParams {
  double radius = 1.0;
  double radius2 = 1.0;
  double radius3 = 1.0;
  double radius4 = 1.0;
  double amplitude = 0.1;
  double eps = 0.08;
  double t_extent = 0.45;
  std::uint64_t seed = 7;
  int codim = 1;
};

/// Shape registry addressable by name (CLI surface).
ZooShape make_shape(const std::string& name, const ShapeParams& params = {});
std::vector<std::string> shape_names();

/// Seeded interior sample points, respecting per-dimension valid margins.
std::vector<std::vector<double>> sample_points(const ImmersionChart& chart, int count,
                                               std::uint64_t seed);

}  // namespace wte
