#include "wte/zoo.hpp"

#include <cmath>

#include "wte/errors.hpp"
#include "wte/rng.hpp"

namespace wte {
namespace {

constexpr double kPi = 3.14159265358979323846;

/// Seeded trigonometric polynomial sum_k (a_k cos<k,x> + b_k sin<k,x>),
/// normalized so that |f| <= 1 and |grad f| <= 1.
struct TrigPoly {
  struct Term {
    std::array<int, 4> k{};
    double ca = 0.0;
    double cb = 0.0;
  };
  int nv = 0;
  std::vector<Term> terms;

  static TrigPoly random(int nv, int num_terms, Rng& rng) {
    TrigPoly f;
    f.nv = nv;
    double scale = 0.0;
    while (static_cast<int>(f.terms.size()) < num_terms) {
      Term t;
      int l1 = 0;
      for (int v = 0; v < nv; ++v) {
        t.k[v] = static_cast<int>(rng.below(5)) - 2;  // -2..2
        l1 += std::abs(t.k[v]);
      }
      if (l1 == 0 || l1 > 3) continue;
      t.ca = rng.uniform(-1.0, 1.0);
      t.cb = rng.uniform(-1.0, 1.0);
      scale += (std::abs(t.ca) + std::abs(t.cb)) * std::max(1, l1);
      f.terms.push_back(t);
    }
    for (auto& t : f.terms) {
      t.ca /= scale;
      t.cb /= scale;
    }
    return f;
  }

  Jet eval(std::span<const Jet> x) const {
    Jet acc = Jet::constant(x[0].num_vars(), x[0].order(), 0.0);
    for (const auto& t : terms) {
      Jet phase = Jet::constant(x[0].num_vars(), x[0].order(), 0.0);
      for (int v = 0; v < nv; ++v) {
        if (t.k[v] != 0) phase += x[v] * static_cast<double>(t.k[v]);
      }
      if (t.ca != 0.0) acc += cos(phase) * t.ca;
      if (t.cb != 0.0) acc += sin(phase) * t.cb;
    }
    return acc;
  }
};

/// Seeded ambient displacement y -> y + eps P(y) with quadratic polynomial P,
/// normalized per component. Keeps closed images closed.
struct QuadMap {
  int m = 0;
  double eps = 0.0;
  std::vector<std::vector<double>> lin;   // [a][b]
  std::vector<std::vector<double>> quad;  // [a][b * m + c], b <= c

  static QuadMap random(int m, double eps, Rng& rng) {
    QuadMap q;
    q.m = m;
    q.eps = eps;
    q.lin.assign(m, std::vector<double>(m, 0.0));
    q.quad.assign(m, std::vector<double>(m * m, 0.0));
    for (int a = 0; a < m; ++a) {
      double scale = 0.0;
      for (int b = 0; b < m; ++b) {
        q.lin[a][b] = rng.uniform(-1.0, 1.0);
        scale += std::abs(q.lin[a][b]);
      }
      for (int b = 0; b < m; ++b) {
        for (int c = b; c < m; ++c) {
          const double v = rng.uniform(-1.0, 1.0);
          q.quad[a][b * m + c] = v;
          scale += 2.0 * std::abs(v);
        }
      }
      for (auto& v : q.lin[a]) v /= scale;
      for (auto& v : q.quad[a]) v /= scale;
    }
    return q;
  }

  JetVec apply(const JetVec& y) const {
    JetVec out = y;
    for (int a = 0; a < m; ++a) {
      Jet p = Jet::constant(y[0].num_vars(), y[0].order(), 0.0);
      for (int b = 0; b < m; ++b) {
        if (lin[a][b] != 0.0) p += y[b] * lin[a][b];
      }
      for (int b = 0; b < m; ++b) {
        for (int c = b; c < m; ++c) {
          const double v = quad[a][b * m + c];
          if (v != 0.0) p += mul(y[b], y[c]) * v;
        }
      }
      out[a] += p * eps;
    }
    return out;
  }
};

// --- catenoid profile ---------------------------------------------------------

/// Taylor coefficients at a point where f = f0, f' = f1, for f'' = c (1 + f'^2) / f.
std::vector<double> profile_taylor(double c, double f0, double f1, int ord) {
  std::vector<double> a(ord + 1, 0.0);
  a[0] = f0;
  if (ord >= 1) a[1] = f1;
  for (int k = 0; k + 2 <= ord; ++k) {
    double rhs = (k == 0) ? c : 0.0;
    for (int i = 0; i <= k; ++i) {
      rhs += c * (i + 1) * (k - i + 1) * a[i + 1] * a[k - i + 1];
    }
    for (int i = 1; i <= k; ++i) {
      rhs -= a[i] * (k - i + 2) * (k - i + 1) * a[k - i + 2];
    }
    a[k + 2] = rhs / (a[0] * (k + 2) * (k + 1));
  }
  return a;
}

constexpr int kProfileOrder = 12;
constexpr double kProfileStep = 0.1;

/// Walk the profile from t = 0 to t_target by Taylor steps; returns (f, f').
std::pair<double, double> profile_state(double c, double f0, double t_target) {
  double f = f0, fp = 0.0, t = 0.0;
  const double dir = t_target >= 0.0 ? 1.0 : -1.0;
  while (std::abs(t_target - t) > 1e-300) {
    const double step = dir * std::min(kProfileStep, std::abs(t_target - t));
    const auto a = profile_taylor(c, f, fp, kProfileOrder);
    double val = 0.0, dval = 0.0;
    for (int k = kProfileOrder; k >= 0; --k) val = val * step + a[k];
    for (int k = kProfileOrder; k >= 1; --k) dval = dval * step + k * a[k];
    f = val;
    fp = dval;
    t += step;
    if (f > 50.0) throw DomainError("catenoid profile: extent beyond maximal interval");
    if (std::abs(t_target - t) < 1e-14) break;
  }
  return {f, fp};
}

}  // namespace

Jet catenoid_profile_jet(double c, double f0, const Jet& t) {
  const auto [f, fp] = profile_state(c, f0, t.value());
  const auto series = profile_taylor(c, f, fp, std::max(t.order(), 2));
  return compose_univariate(std::span<const double>(series.data(), t.order() + 1), t);
}

double catenoid4_max_extent() {
  // march until the profile leaves the safe window
  double t = 0.0, f = 1.0, fp = 0.0;
  while (f < 8.0 && t < 2.0) {
    const auto a = profile_taylor(3.0, f, fp, kProfileOrder);
    double val = 0.0, dval = 0.0;
    for (int k = kProfileOrder; k >= 0; --k) val = val * kProfileStep + a[k];
    for (int k = kProfileOrder; k >= 1; --k) dval = dval * kProfileStep + k * a[k];
    f = val;
    fp = dval;
    t += kProfileStep;
  }
  return t;
}

ZooShape make_s4(double r) {
  if (r <= 0.0) throw UsageError("make_s4: radius must be positive");
  ZooShape s;
  s.name = "s4";
  s.ref.abs_H = 1.0 / r;
  s.ref.h2 = 4.0 / (r * r);
  s.ref.energy = 8.0 * kPi * kPi;
  s.ref.critical = true;
  auto& c = s.chart;
  c.name = s.name;
  c.n = 4;
  c.m = 5;
  c.domain = {Interval{0.0, kPi / 2}, Interval{0.0, kPi}, Interval{0.0, 2 * kPi},
              Interval{0.0, 2 * kPi}};
  c.periodic = {false, false, true, true};
  c.margin = {0.03, 0.03, 0.0, 0.0};
  c.eval = [r](std::span<const Jet> x) {
    const Jet ca = cos(x[0]), sa = sin(x[0]);
    const Jet ct = cos(x[1]), st = sin(x[1]);
    const Jet cp = cos(x[2]), sp = sin(x[2]);
    const Jet cq = cos(x[3]), sq = sin(x[3]);
    std::vector<Jet> out;
    out.push_back(mul(ca, cp) * r);
    out.push_back(mul(ca, sp) * r);
    out.push_back(mul(sa, mul(st, cq)) * r);
    out.push_back(mul(sa, mul(st, sq)) * r);
    out.push_back(mul(sa, ct) * r);
    return out;
  };
  return s;
}

ZooShape make_sphere2(double r) {
  if (r <= 0.0) throw UsageError("make_sphere2: radius must be positive");
  ZooShape s;
  s.name = "sphere2";
  s.ref.abs_H = 1.0 / r;
  s.ref.h2 = 2.0 / (r * r);
  s.ref.energy = 4.0 * kPi;
  s.ref.chi = 2;
  auto& c = s.chart;
  c.name = s.name;
  c.n = 2;
  c.m = 3;
  c.domain = {Interval{0.0, kPi}, Interval{0.0, 2 * kPi}};
  c.periodic = {false, true};
  c.margin = {0.03, 0.0};
  c.eval = [r](std::span<const Jet> x) {
    const Jet ct = cos(x[0]), st = sin(x[0]);
    const Jet cp = cos(x[1]), sp = sin(x[1]);
    std::vector<Jet> out;
    out.push_back(mul(st, cp) * r);
    out.push_back(mul(st, sp) * r);
    out.push_back(ct * r);
    return out;
  };
  return s;
}

ZooShape make_torus2(double R, double a) {
  if (!(R > a && a > 0.0)) throw UsageError("make_torus2: need R > a > 0");
  ZooShape s;
  s.name = "torus2";
  s.ref.chi = 0;
  s.ref.energy = kPi * kPi * R * R / (a * std::sqrt(R * R - a * a));
  auto& c = s.chart;
  c.name = s.name;
  c.n = 2;
  c.m = 3;
  c.domain = {Interval{0.0, 2 * kPi}, Interval{0.0, 2 * kPi}};
  c.periodic = {true, true};
  c.eval = [R, a](std::span<const Jet> x) {
    const Jet cu = cos(x[0]), su = sin(x[0]);
    const Jet cv = cos(x[1]), sv = sin(x[1]);
    Jet ring = cv * a + R;
    std::vector<Jet> out;
    out.push_back(mul(ring, cu));
    out.push_back(mul(ring, su));
    out.push_back(sv * a);
    return out;
  };
  return s;
}

ZooShape make_clifford_torus_stereo() {
  ZooShape s = make_torus2(std::sqrt(2.0), 1.0);
  s.name = "clifford";
  s.chart.name = s.name;
  s.ref.energy = 2.0 * kPi * kPi;
  return s;
}

ZooShape make_product_spheres(const std::vector<std::pair<int, double>>& factors) {
  int dim_sum = 0, amb = 0;
  double habs2 = 0.0, h2 = 0.0;
  for (const auto& [d, r] : factors) {
    if (d < 1 || d > 3) throw UsageError("product factor dimension must be 1..3");
    if (r <= 0.0) throw UsageError("product factor radius must be positive");
    dim_sum += d;
    amb += d + 1;
    habs2 += static_cast<double>(d) * d / (r * r);
    h2 += static_cast<double>(d) / (r * r);
  }
  if (dim_sum != 4) throw UsageError("product factor dimensions must sum to 4");

  ZooShape s;
  s.name = "product";
  for (const auto& [d, r] : factors) {
    s.name += "_s" + std::to_string(d);
    (void)r;
  }
  s.ref.abs_H = std::sqrt(habs2) / 4.0;
  s.ref.h2 = h2;
  s.ref.critical = true;  // per-radius criticality is measured, not assumed
  auto& c = s.chart;
  c.name = s.name;
  c.n = 4;
  c.m = amb;

  int slot = 0;
  for (const auto& [d, r] : factors) {
    (void)r;
    if (d == 1) {
      c.domain[slot] = {0.0, 2 * kPi};
      c.periodic[slot] = true;
      slot += 1;
    } else if (d == 2) {
      c.domain[slot] = {0.0, kPi};
      c.periodic[slot] = false;
      c.margin[slot] = 0.03;
      c.domain[slot + 1] = {0.0, 2 * kPi};
      c.periodic[slot + 1] = true;
      slot += 2;
    } else {
      c.domain[slot] = {0.0, kPi};
      c.periodic[slot] = false;
      c.margin[slot] = 0.03;
      c.domain[slot + 1] = {0.0, kPi};
      c.periodic[slot + 1] = false;
      c.margin[slot + 1] = 0.03;
      c.domain[slot + 2] = {0.0, 2 * kPi};
      c.periodic[slot + 2] = true;
      slot += 3;
    }
  }

  auto fs = factors;
  c.eval = [fs](std::span<const Jet> x) {
    std::vector<Jet> out;
    int p = 0;
    for (const auto& [d, r] : fs) {
      if (d == 1) {
        out.push_back(cos(x[p]) * r);
        out.push_back(sin(x[p]) * r);
        p += 1;
      } else if (d == 2) {
        const Jet ct = cos(x[p]), st = sin(x[p]);
        const Jet cp = cos(x[p + 1]), sp = sin(x[p + 1]);
        out.push_back(mul(st, cp) * r);
        out.push_back(mul(st, sp) * r);
        out.push_back(ct * r);
        p += 2;
      } else {
        const Jet cx = cos(x[p]), sx = sin(x[p]);
        const Jet ct = cos(x[p + 1]), st = sin(x[p + 1]);
        const Jet cp = cos(x[p + 2]), sp = sin(x[p + 2]);
        out.push_back(cx * r);
        out.push_back(mul(sx, mul(st, cp)) * r);
        out.push_back(mul(sx, mul(st, sp)) * r);
        out.push_back(mul(sx, ct) * r);
        p += 3;
      }
    }
    return out;
  };
  return s;
}

ZooShape make_flat_plane(int n, int m) {
  ZooShape s;
  s.name = "plane" + std::to_string(n);
  s.ref.abs_H = 0.0;
  s.ref.h2 = 0.0;
  s.ref.energy = 0.0;
  s.ref.critical = true;
  if (n == 2) s.ref.chi = 0;
  auto& c = s.chart;
  c.name = s.name;
  c.n = n;
  c.m = m;
  for (int i = 0; i < n; ++i) {
    c.domain[i] = {0.0, 2 * kPi};
    c.periodic[i] = true;
  }
  c.eval = [n, m](std::span<const Jet> x) {
    std::vector<Jet> out;
    for (int i = 0; i < n; ++i) out.push_back(x[i]);
    for (int a = n; a < m; ++a) out.push_back(Jet::constant(x[0].num_vars(), x[0].order(), 0.0));
    return out;
  };
  return s;
}

ZooShape make_graph_chart(int n, int m, double amplitude, std::uint64_t seed) {
  if (m <= n) throw UsageError("make_graph_chart: need ambient dimension > n");
  ZooShape s;
  s.name = "graph" + std::to_string(n);
  auto& c = s.chart;
  c.name = s.name;
  c.n = n;
  c.m = m;
  for (int i = 0; i < n; ++i) {
    c.domain[i] = {0.0, 2 * kPi};
    c.periodic[i] = true;
  }
  Rng rng(seed * 1000003ULL + 17ULL * n + m);
  std::vector<TrigPoly> fs;
  for (int a = n; a < m; ++a) fs.push_back(TrigPoly::random(n, 6, rng));
  c.eval = [n, fs, amplitude](std::span<const Jet> x) {
    std::vector<Jet> out;
    for (int i = 0; i < n; ++i) out.push_back(x[i]);
    for (const auto& f : fs) out.push_back(f.eval(x) * amplitude);
    return out;
  };
  return s;
}

ZooShape make_catenoid4(double t_extent) {
  if (t_extent <= 0.0) throw UsageError("make_catenoid4: extent must be positive");
  if (t_extent > catenoid4_max_extent()) {
    throw UsageError("make_catenoid4: extent beyond the profile's maximal interval");
  }
  ZooShape s;
  s.name = "catenoid4";
  s.ref.abs_H = 0.0;
  s.ref.critical = true;
  auto& c = s.chart;
  c.name = s.name;
  c.n = 4;
  c.m = 5;
  c.domain = {Interval{-t_extent, t_extent}, Interval{0.0, kPi}, Interval{0.0, kPi},
              Interval{0.0, 2 * kPi}};
  c.periodic = {false, false, false, true};
  c.margin = {0.03, 0.03, 0.03, 0.0};
  c.eval = [](std::span<const Jet> x) {
    Jet f = catenoid_profile_jet(3.0, 1.0, x[0]);
    const Jet cx = cos(x[1]), sx = sin(x[1]);
    const Jet ct = cos(x[2]), st = sin(x[2]);
    const Jet cp = cos(x[3]), sp = sin(x[3]);
    std::vector<Jet> out;
    out.push_back(mul(f, cx));
    out.push_back(mul(f, mul(sx, mul(st, cp))));
    out.push_back(mul(f, mul(sx, mul(st, sp))));
    out.push_back(mul(f, mul(sx, ct)));
    out.push_back(x[0]);
    return out;
  };
  return s;
}

ZooShape make_bumpy_s4(double eps, std::uint64_t seed) {
  ZooShape base = make_s4(1.0);
  ZooShape s;
  s.name = "bumpy_s4";
  s.chart = base.chart;
  s.chart.name = s.name;
  Rng rng(seed * 7777777ULL + 3ULL);
  QuadMap q = QuadMap::random(5, eps, rng);
  auto inner = base.chart.eval;
  s.chart.eval = [inner, q](std::span<const Jet> x) { return q.apply(inner(x)); };
  return s;
}

ZooShape make_bumpy_s1s3(double eps, std::uint64_t seed) {
  ZooShape base = make_product_spheres({{1, 1.0}, {3, 1.0}});
  ZooShape s;
  s.name = "bumpy_s1s3";
  s.chart = base.chart;
  s.chart.name = s.name;
  Rng rng(seed * 424243ULL + 11ULL);
  QuadMap q = QuadMap::random(6, eps, rng);
  auto inner = base.chart.eval;
  s.chart.eval = [inner, q](std::span<const Jet> x) { return q.apply(inner(x)); };
  return s;
}

ZooShape make_shape(const std::string& name, const ShapeParams& p) {
  if (name == "s4") return make_s4(p.radius);
  if (name == "sphere2") return make_sphere2(p.radius);
  if (name == "torus2") return make_torus2(p.radius, p.radius2);
  if (name == "clifford") return make_clifford_torus_stereo();
  if (name == "s1s3") return make_product_spheres({{1, p.radius}, {3, p.radius2}});
  if (name == "s2s2") return make_product_spheres({{2, p.radius}, {2, p.radius2}});
  if (name == "s1s1s2") {
    return make_product_spheres({{1, p.radius}, {1, p.radius2}, {2, p.radius3}});
  }
  if (name == "torus4") {
    return make_product_spheres(
        {{1, p.radius}, {1, p.radius2}, {1, p.radius3}, {1, p.radius4}});
  }
  if (name == "plane4") return make_flat_plane(4, 5);
  if (name == "plane2") return make_flat_plane(2, 3);
  if (name == "graph4") return make_graph_chart(4, 4 + p.codim, p.amplitude, p.seed);
  if (name == "graph2") return make_graph_chart(2, 2 + p.codim, p.amplitude, p.seed);
  if (name == "catenoid4") return make_catenoid4(p.t_extent);
  if (name == "bumpy_s4") return make_bumpy_s4(p.eps, p.seed);
  if (name == "bumpy_s1s3") return make_bumpy_s1s3(p.eps, p.seed);
  throw UsageError("unknown shape: " + name);
}

std::vector<std::string> shape_names() {
  return {"s4",     "sphere2", "torus2", "clifford", "s1s3",      "s2s2",
          "s1s1s2", "torus4",  "plane4", "plane2",   "graph4",    "graph2",
          "catenoid4", "bumpy_s4", "bumpy_s1s3"};
}

std::vector<std::vector<double>> sample_points(const ImmersionChart& chart, int count,
                                               std::uint64_t seed) {
  Rng rng(seed ^ 0xabcdef1234567ULL);
  std::vector<std::vector<double>> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k) {
    std::vector<double> p(chart.n);
    for (int i = 0; i < chart.n; ++i) {
      const auto& d = chart.domain[i];
      const double pad = chart.periodic[i] ? 0.0 : chart.margin[i] * d.length();
      p[i] = rng.uniform(d.lo + pad, d.hi - pad);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace wte
