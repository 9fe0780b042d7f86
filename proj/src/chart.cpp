#include "wte/chart.hpp"

#include <cmath>

#include "wte/errors.hpp"

namespace wte {
namespace {

Jet det_rec(const Ten<Jet>& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  if (k == 1) return a.at(rows[0], cols[0]);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  Jet acc;
  bool first = true;
  for (int j = 0; j < k; ++j) {
    std::vector<int> sub_cols;
    sub_cols.reserve(k - 1);
    for (int c = 0; c < k; ++c) {
      if (c != j) sub_cols.push_back(cols[c]);
    }
    Jet term = mul(a.at(rows[0], cols[j]), det_rec(a, sub_rows, sub_cols));
    if (j % 2) term = -term;
    if (first) {
      acc = term;
      first = false;
    } else {
      acc += term;
    }
  }
  return acc;
}

Jet determinant(const Ten<Jet>& a, int n) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return det_rec(a, idx, idx);
}

Ten<Jet> inverse_from_cofactors(const Ten<Jet>& a, int n, const Jet& det) {
  Ten<Jet> inv(n, 2);
  Jet inv_det = reciprocal(det);
  if (n == 1) {
    inv.at(0, 0) = inv_det;
    return inv;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int r = 0; r < n; ++r) {
        if (r != i) rows.push_back(r);
      }
      for (int c = 0; c < n; ++c) {
        if (c != j) cols.push_back(c);
      }
      Jet cof = det_rec(a, rows, cols);
      if ((i + j) % 2) cof = -cof;
      inv.at(j, i) = mul(cof, inv_det);
    }
  }
  return inv;
}

template <typename T>
T comp_partial(const T& t, int dir);

template <>
Jet comp_partial<Jet>(const Jet& t, int dir) {
  return partial(t, dir);
}

template <>
JetVec comp_partial<JetVec>(const JetVec& t, int dir) {
  JetVec out(t.size());
  for (std::size_t a = 0; a < t.size(); ++a) out[a] = partial(t[a], dir);
  return out;
}

template <typename T>
Ten<T> cov_deriv_impl(const GeometryFrame& f, const Ten<T>& t) {
  const int n = f.n;
  Ten<T> out(n, t.rank + 1);
  std::array<int, 4> idx{};
  const std::size_t total = t.comp.size();
  for (int k = 0; k < n; ++k) {
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rem = flat;
      for (int r = t.rank - 1; r >= 0; --r) {
        idx[r] = static_cast<int>(rem % n);
        rem /= n;
      }
      T acc = comp_partial(t.comp[flat], k);
      for (int r = 0; r < t.rank; ++r) {
        const int ir = idx[r];
        for (int l = 0; l < n; ++l) {
          std::size_t lflat = 0;
          for (int q = 0; q < t.rank; ++q) lflat = lflat * n + (q == r ? l : idx[q]);
          if constexpr (std::is_same_v<T, Jet>) {
            acc -= mul(f.gamma.at(l, k, ir), t.comp[lflat]);
          } else {
            const Jet& gam = f.gamma.at(l, k, ir);
            for (std::size_t a = 0; a < acc.size(); ++a) acc[a] -= mul(gam, t.comp[lflat][a]);
          }
        }
      }
      out.comp[static_cast<std::size_t>(k) * total + flat] = std::move(acc);
    }
  }
  return out;
}

}  // namespace

std::vector<Jet> ImmersionChart::eval_at(std::span<const double> point, int order) const {
  std::vector<Jet> seeds;
  seeds.reserve(n);
  for (int i = 0; i < n; ++i) seeds.push_back(seed_variable(i, point[i], n, order));
  return eval(seeds);
}

GeometryFrame frame(const ImmersionChart& chart, std::span<const double> point, int order) {
  if (order < 2) throw OrderExhausted("frame: jet order must be >= 2");
  GeometryFrame f;
  f.chart = &chart;
  f.n = chart.n;
  f.m = chart.m;
  f.order = order;
  f.residual_order = order - 2;
  for (int i = 0; i < chart.n; ++i) f.point[i] = point[i];

  f.phi = chart.eval_at(point, order);
  if (static_cast<int>(f.phi.size()) != chart.m) throw Error("chart evaluator arity mismatch");

  const int n = f.n;
  f.dphi = Ten<JetVec>(n, 1);
  for (int i = 0; i < n; ++i) {
    f.dphi.at(i) = comp_partial(f.phi, i);
  }

  f.g = Ten<Jet>(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      f.g.at(i, j) = dotv(f.dphi.at(i), f.dphi.at(j));
      if (j != i) f.g.at(j, i) = f.g.at(i, j);
    }
  }

  f.detg = determinant(f.g, n);

  // Rank check on the tangent Gram matrix, scale-free (Hadamard ratio):
  // det g / prod_i g_ii is 1 for orthogonal tangents and -> 0 at a branch point.
  double diag_prod = 1.0;
  for (int i = 0; i < n; ++i) diag_prod *= f.g.at(i, i).value();
  if (!(f.detg.value() > 1e-10 * diag_prod) || diag_prod <= 0.0) {
    throw DegenerateMetric("frame: tangent Gram matrix numerically degenerate at sample point");
  }

  f.ginv = inverse_from_cofactors(f.g, n, f.detg);
  f.sqrtg = sqrt(f.detg);

  Ten<Jet> dg(n, 3);  // dg.at(k,i,j) = d_k g_ij
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        dg.at(k, i, j) = partial(f.g.at(i, j), k);
        if (j != i) dg.at(k, j, i) = dg.at(k, i, j);
      }
    }
  }
  f.gamma = Ten<Jet>(n, 3);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Jet acc(f.phi[0].num_vars(), order - 2);
        for (int l = 0; l < n; ++l) {
          Jet sum = dg.at(i, j, l) + dg.at(j, i, l) - dg.at(l, i, j);
          acc += mul(f.ginv.at(k, l), sum);
        }
        f.gamma.at(k, i, j) = acc * 0.5;
        if (j != i) f.gamma.at(k, j, i) = f.gamma.at(k, i, j);
      }
    }
  }

  f.ddphi = Ten<JetVec>(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      f.ddphi.at(i, j) = comp_partial(f.dphi.at(i), j);
      if (j != i) f.ddphi.at(j, i) = f.ddphi.at(i, j);
    }
  }

  f.h = Ten<JetVec>(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      f.h.at(i, j) = project_normal(f, f.ddphi.at(i, j));
      if (j != i) f.h.at(j, i) = f.h.at(i, j);
    }
  }

  f.H = zerov(f.m, f.phi[0].num_vars(), order - 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      axpyv(f.H, f.ginv.at(i, j), f.h.at(i, j));
    }
  }
  for (auto& c : f.H) c *= 1.0 / n;

  f.h0 = Ten<JetVec>(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      f.h0.at(i, j) = subv(f.h.at(i, j), scalev(f.H, f.g.at(i, j)));
      if (j != i) f.h0.at(j, i) = f.h0.at(i, j);
    }
  }
  return f;
}

JetVec project_tangent(const GeometryFrame& f, const JetVec& v) {
  const int n = f.n;
  std::vector<Jet> c(n);
  for (int l = 0; l < n; ++l) c[l] = dotv(v, f.dphi.at(l));
  const int out_order = std::min(v[0].order(), f.order - 1);
  JetVec out = zerov(f.m, v[0].num_vars(), out_order);
  for (int k = 0; k < n; ++k) {
    Jet w(v[0].num_vars(), out_order);
    for (int l = 0; l < n; ++l) w += mul(f.ginv.at(k, l), c[l]);
    axpyv(out, w, f.dphi.at(k));
  }
  return out;
}

JetVec project_normal(const GeometryFrame& f, const JetVec& v) {
  JetVec t = project_tangent(f, v);
  JetVec out(v.size());
  for (std::size_t a = 0; a < v.size(); ++a) out[a] = v[a] - t[a];
  return out;
}

Ten<Jet> covariant_derivative(const GeometryFrame& f, const Ten<Jet>& t) {
  return cov_deriv_impl(f, t);
}

Ten<JetVec> covariant_derivative(const GeometryFrame& f, const Ten<JetVec>& t) {
  return cov_deriv_impl(f, t);
}

Jet laplace_beltrami(const GeometryFrame& f, const Jet& fld) {
  const int n = f.n;
  Ten<Jet> grad(n, 1);
  for (int i = 0; i < n; ++i) grad.at(i) = partial(fld, i);
  Ten<Jet> hess = covariant_derivative(f, grad);
  return trace_g(f, hess);
}

JetVec laplace_beltrami(const GeometryFrame& f, const JetVec& fld) {
  JetVec out(fld.size());
  for (std::size_t a = 0; a < fld.size(); ++a) out[a] = laplace_beltrami(f, fld[a]);
  return out;
}

JetVec normal_laplacian(const GeometryFrame& f, const JetVec& b, double tol) {
  JetVec tang = project_tangent(f, b);
  if (norm_value(tang) > tol * (norm_value(b) + 1.0)) {
    throw NotNormal("normal_laplacian: field has a tangential part above tolerance");
  }
  const int n = f.n;
  Ten<JetVec> grad(n, 1);
  for (int i = 0; i < n; ++i) grad.at(i) = project_normal(f, comp_partial(b, i));
  Ten<JetVec> dgrad = covariant_derivative(f, grad);
  return project_normal(f, trace_g(f, dgrad));
}

Jet trace_g(const GeometryFrame& f, const Ten<Jet>& t) {
  Jet acc;
  bool first = true;
  for (int i = 0; i < f.n; ++i) {
    for (int j = 0; j < f.n; ++j) {
      Jet term = mul(f.ginv.at(i, j), t.at(i, j));
      if (first) {
        acc = term;
        first = false;
      } else {
        acc += term;
      }
    }
  }
  return acc;
}

JetVec trace_g(const GeometryFrame& f, const Ten<JetVec>& t) {
  JetVec acc;
  bool first = true;
  for (int i = 0; i < f.n; ++i) {
    for (int j = 0; j < f.n; ++j) {
      if (first) {
        acc = scalev(t.at(i, j), f.ginv.at(i, j));
        first = false;
      } else {
        axpyv(acc, f.ginv.at(i, j), t.at(i, j));
      }
    }
  }
  return acc;
}

std::vector<double> values(const JetVec& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value();
  return out;
}

double norm_value(const JetVec& v) {
  double s = 0.0;
  for (const auto& c : v) s += c.value() * c.value();
  return std::sqrt(s);
}

JetVec unit_normal_codim1(const GeometryFrame& f) {
  if (f.m != f.n + 1) throw Error("unit_normal_codim1: chart is not codimension 1");
  int best = 0;
  double best_norm2 = -1.0;
  for (int a = 0; a < f.m; ++a) {
    double tan2 = 0.0;
    for (int k = 0; k < f.n; ++k) {
      double wk = 0.0;
      for (int l = 0; l < f.n; ++l) wk += f.ginv.at(k, l).value() * f.dphi.at(l)[a].value();
      tan2 += wk * f.dphi.at(k)[a].value();
    }
    const double norm2 = 1.0 - tan2;
    if (norm2 > best_norm2) {
      best_norm2 = norm2;
      best = a;
    }
  }
  JetVec e = zerov(f.m, f.phi[0].num_vars(), f.order - 1);
  e[best] += 1.0;
  JetVec nn = project_normal(f, e);
  Jet inv_len = reciprocal(sqrt(dotv(nn, nn)));
  return scalev(nn, inv_len);
}

}  // namespace wte
