#pragma once

#include <array>
#include <vector>

#include "wte/jet.hpp"

namespace wte {

/// Ambient vector (size m), Minkowski vector (m+2) or bivector (m(m-1)/2)
/// with jet components.
using JetVec = std::vector<Jet>;

inline Jet dotv(const JetVec& a, const JetVec& b) {
  Jet acc = mul(a[0], b[0]);
  for (std::size_t i = 1; i < a.size(); ++i) acc += mul(a[i], b[i]);
  return acc;
}

inline JetVec addv(const JetVec& a, const JetVec& b) {
  JetVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline JetVec subv(const JetVec& a, const JetVec& b) {
  JetVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline JetVec scalev(const JetVec& a, const Jet& s) {
  JetVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], s);
  return out;
}

inline JetVec scalev(const JetVec& a, double s) {
  JetVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

inline JetVec negv(const JetVec& a) {
  JetVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline void axpyv(JetVec& acc, const Jet& s, const JetVec& x) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += mul(s, x[i]);
}

inline JetVec zerov(std::size_t count, int num_vars, int order) {
  return JetVec(count, Jet(num_vars, order));
}

/// Number of independent bivector components over R^m.
inline int biv_dim(int m) { return m * (m - 1) / 2; }

/// Flat index of the (a, b) slot, a < b.
inline int biv_index(int m, int a, int b) {
  return a * m - a * (a + 1) / 2 + (b - a - 1);
}

/// u ^ v as a bivector with components (u_a v_b - u_b v_a), a < b.
inline JetVec wedgev(const JetVec& u, const JetVec& v) {
  const int m = static_cast<int>(u.size());
  JetVec out;
  out.reserve(biv_dim(m));
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) out.push_back(mul(u[a], v[b]) - mul(u[b], v[a]));
  }
  return out;
}

/// Dense tensor with n^rank components of type T (T = Jet or JetVec),
/// all indices down; raising is explicit via the frame's inverse metric.
template <typename T>
struct Ten {
  int n = 0;
  int rank = 0;
  std::vector<T> comp;

  Ten() = default;
  Ten(int n_, int rank_) : n(n_), rank(rank_) {
    std::size_t total = 1;
    for (int r = 0; r < rank_; ++r) total *= n_;
    comp.resize(total);
  }

  std::size_t flat(std::array<int, 4> idx) const {
    std::size_t f = 0;
    for (int r = 0; r < rank; ++r) f = f * n + idx[r];
    return f;
  }

  T& at(int i) { return comp[i]; }
  const T& at(int i) const { return comp[i]; }
  T& at(int i, int j) { return comp[static_cast<std::size_t>(i) * n + j]; }
  const T& at(int i, int j) const { return comp[static_cast<std::size_t>(i) * n + j]; }
  T& at(int i, int j, int k) { return comp[(static_cast<std::size_t>(i) * n + j) * n + k]; }
  const T& at(int i, int j, int k) const {
    return comp[(static_cast<std::size_t>(i) * n + j) * n + k];
  }
  T& at(int i, int j, int k, int l) {
    return comp[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  }
  const T& at(int i, int j, int k, int l) const {
    return comp[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  }
};

}  // namespace wte
