#include "wte/jet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

#include "wte/kernels.hpp"

namespace wte {
namespace {

constexpr int kMaxVars = 4;
constexpr int kMaxOrder = 16;

using MultiIndex = std::array<std::uint8_t, kMaxVars>;

int pack(const MultiIndex& a) {
  return a[0] | (a[1] << 5) | (a[2] << 10) | (a[3] << 15);
}

/// Per-num_vars tables: the graded-lex enumeration up to degree kMaxOrder, the
/// packed-index -> position lookup, and cached product/derivative plans per order.
/// Positions are order-independent because the multi-indices of degree <= K form
/// a prefix of those of degree <= K' for K < K'.
struct VarTables {
  int nv = 0;
  std::vector<MultiIndex> index;           // graded-lex enumeration
  std::vector<std::uint8_t> degree;        // |alpha| per position
  std::vector<std::int32_t> pos_of;        // packed -> position
  std::vector<int> count_by_order;         // C(K + nv, nv) for K = 0..kMaxOrder

  std::array<kernels::MulPlan, kMaxOrder + 1> mul_plans;
  std::array<std::once_flag, kMaxOrder + 1> mul_once;

  struct DerivPlan {
    std::vector<std::int32_t> src;
    std::vector<double> fac;
  };
  // deriv_plans[K][d]: plan for d/dx_d on an order-K jet
  std::array<std::array<DerivPlan, kMaxVars>, kMaxOrder + 1> deriv_plans;
  std::array<std::once_flag, kMaxOrder + 1> deriv_once;
};

void enumerate_level(int nv, int slot, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (slot == nv - 1) {
    cur[slot] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[slot] = static_cast<std::uint8_t>(e);
    enumerate_level(nv, slot + 1, remaining - e, cur, out);
  }
}

void build_tables(VarTables& t, int nv) {
  t.nv = nv;
  t.count_by_order.assign(kMaxOrder + 1, 0);
  for (int deg = 0; deg <= kMaxOrder; ++deg) {
    std::vector<MultiIndex> level;
    MultiIndex cur{};
    enumerate_level(nv, 0, deg, cur, level);
    for (const auto& mi : level) {
      t.index.push_back(mi);
      t.degree.push_back(static_cast<std::uint8_t>(deg));
    }
    t.count_by_order[deg] = static_cast<int>(t.index.size());
  }
  t.pos_of.assign(1 << (5 * nv), -1);
  for (std::size_t p = 0; p < t.index.size(); ++p) {
    t.pos_of[pack(t.index[p])] = static_cast<std::int32_t>(p);
  }
}

VarTables& tables(int nv) {
  static std::array<VarTables, kMaxVars + 1> cache;
  static std::array<std::once_flag, kMaxVars + 1> flags;
  std::call_once(flags[nv], [nv] { build_tables(cache[nv], nv); });
  return cache[nv];
}

const kernels::MulPlan& mul_plan(VarTables& t, int order) {
  std::call_once(t.mul_once[order], [&t, order] {
    const int n_out = t.count_by_order[order];
    kernels::MulPlan plan;
    std::vector<std::int32_t> counts(n_out, 0);
    const int n_in = n_out;  // operands read as prefixes of the same enumeration
    for (int i = 0; i < n_in; ++i) {
      const int di = t.degree[i];
      if (di > order) break;
      for (int j = 0; j < n_in; ++j) {
        if (di + t.degree[j] > order) break;
        MultiIndex sum{};
        for (int v = 0; v < kMaxVars; ++v) sum[v] = static_cast<std::uint8_t>(t.index[i][v] + t.index[j][v]);
        ++counts[t.pos_of[pack(sum)]];
      }
    }
    plan.seg.assign(n_out + 1, 0);
    for (int k = 0; k < n_out; ++k) plan.seg[k + 1] = plan.seg[k] + counts[k];
    plan.ai.resize(plan.seg[n_out]);
    plan.bi.resize(plan.seg[n_out]);
    std::vector<std::int32_t> fill(plan.seg.begin(), plan.seg.end() - 1);
    for (int i = 0; i < n_in; ++i) {
      const int di = t.degree[i];
      if (di > order) break;
      for (int j = 0; j < n_in; ++j) {
        if (di + t.degree[j] > order) break;
        MultiIndex sum{};
        for (int v = 0; v < kMaxVars; ++v) sum[v] = static_cast<std::uint8_t>(t.index[i][v] + t.index[j][v]);
        const std::int32_t k = t.pos_of[pack(sum)];
        plan.ai[fill[k]] = i;
        plan.bi[fill[k]] = j;
        ++fill[k];
      }
    }
    t.mul_plans[order] = std::move(plan);
  });
  return t.mul_plans[order];
}

const VarTables::DerivPlan& deriv_plan(VarTables& t, int order, int dir) {
  std::call_once(t.deriv_once[order], [&t, order] {
    for (int d = 0; d < t.nv; ++d) {
      auto& plan = t.deriv_plans[order][d];
      const int n_out = t.count_by_order[order - 1];
      plan.src.resize(n_out);
      plan.fac.resize(n_out);
      for (int p = 0; p < n_out; ++p) {
        MultiIndex up = t.index[p];
        up[d] += 1;
        plan.src[p] = t.pos_of[pack(up)];
        plan.fac[p] = static_cast<double>(up[d]);
      }
    }
  });
  return t.deriv_plans[order][dir];
}

void check_compatible(const Jet& a, const Jet& b) {
  if (a.num_vars() != b.num_vars()) throw Error("jet arity mismatch");
}

double max_abs_coeff(const Jet& a) {
  double m = 0.0;
  for (double c : a.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

constexpr double kSingularityFloor = 1e-13;

}  // namespace

int jet_size(int num_vars, int order) {
  if (num_vars < 1 || num_vars > kMaxVars) throw Error("jet arity must be 1..4");
  if (order < 0 || order > kMaxOrder) throw Error("jet order out of range");
  return tables(num_vars).count_by_order[order];
}

Jet::Jet(int num_vars, int order) : num_vars_(num_vars), order_(order) {
  coeffs_.assign(jet_size(num_vars, order), 0.0);
}

Jet Jet::constant(int num_vars, int order, double value) {
  Jet j(num_vars, order);
  j.coeffs_[0] = value;
  return j;
}

Jet seed_variable(int index, double value, int num_vars, int order) {
  if (index < 0 || index >= num_vars) throw Error("seed_variable: index out of range");
  Jet j(num_vars, order);
  j.coeffs_[0] = value;
  if (order >= 1) {
    std::array<int, kMaxVars> alpha{};
    alpha[index] = 1;
    j.coeff(std::span<const int>(alpha.data(), num_vars)) = 1.0;
  }
  return j;
}

double Jet::coeff(std::span<const int> alpha) const {
  return const_cast<Jet*>(this)->coeff(alpha);
}

double& Jet::coeff(std::span<const int> alpha) {
  MultiIndex mi{};
  int deg = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    mi[i] = static_cast<std::uint8_t>(alpha[i]);
    deg += alpha[i];
  }
  if (deg > order_) throw Error("jet coefficient index beyond order");
  return coeffs_[tables(num_vars_).pos_of[pack(mi)]];
}

double Jet::derivative(std::span<const int> alpha) const {
  double fact = 1.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int k = 2; k <= alpha[i]; ++k) fact *= k;
  }
  return coeff(alpha) * fact;
}

Jet Jet::truncated(int new_order) const {
  if (new_order > order_) throw OrderExhausted("truncated: cannot extend a jet");
  Jet out(num_vars_, new_order);
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

Jet add(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  const Jet& lo = a.order() <= b.order() ? a : b;
  Jet out(a.num_vars(), lo.order());
  kernels::active().add(a.coeffs_.data(), b.coeffs_.data(), out.coeffs_.data(), out.coeffs_.size());
  return out;
}

Jet sub(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  const Jet& lo = a.order() <= b.order() ? a : b;
  Jet out(a.num_vars(), lo.order());
  kernels::active().sub(a.coeffs_.data(), b.coeffs_.data(), out.coeffs_.data(), out.coeffs_.size());
  return out;
}

Jet mul(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  const int order = std::min(a.order(), b.order());
  Jet out(a.num_vars(), order);
  const auto& plan = mul_plan(tables(a.num_vars()), order);
  kernels::active().mul(plan, a.coeffs_.data(), b.coeffs_.data(), out.coeffs_.data());
  return out;
}

Jet mul_with(const kernels::Backend& backend, const Jet& a, const Jet& b) {
  check_compatible(a, b);
  const int order = std::min(a.order(), b.order());
  Jet out(a.num_vars(), order);
  const auto& plan = mul_plan(tables(a.num_vars()), order);
  backend.mul(plan, a.coeffs().data(), b.coeffs().data(), out.coeffs().data());
  return out;
}

Jet operator-(const Jet& a) {
  Jet out = a;
  for (double& c : out.coeffs()) c = -c;
  return out;
}

Jet operator*(const Jet& a, double s) {
  Jet out = a;
  kernels::active().scale(a.coeffs().data(), s, out.coeffs().data(), out.coeffs().size());
  return out;
}

Jet operator+(const Jet& a, double s) {
  Jet out = a;
  out.coeffs()[0] += s;
  return out;
}

Jet operator-(const Jet& a, double s) { return a + (-s); }

Jet operator-(double s, const Jet& a) {
  Jet out = -a;
  out.coeffs()[0] += s;
  return out;
}

Jet& Jet::operator+=(const Jet& rhs) { return *this = add(*this, rhs); }
Jet& Jet::operator-=(const Jet& rhs) { return *this = sub(*this, rhs); }
Jet& Jet::operator+=(double rhs) {
  coeffs_[0] += rhs;
  return *this;
}
Jet& Jet::operator-=(double rhs) {
  coeffs_[0] -= rhs;
  return *this;
}
Jet& Jet::operator*=(double rhs) {
  kernels::active().scale(coeffs_.data(), rhs, coeffs_.data(), coeffs_.size());
  return *this;
}

Jet compose_univariate(std::span<const double> series, const Jet& a) {
  const int order = a.order();
  if (static_cast<int>(series.size()) < order + 1) throw Error("compose_univariate: series too short");
  Jet w = a;
  w.coeffs_[0] = 0.0;  // nilpotent part
  Jet r = Jet::constant(a.num_vars(), order, series[order]);
  for (int k = order - 1; k >= 0; --k) {
    r = mul(r, w);
    r.coeffs_[0] += series[k];
  }
  return r;
}

Jet reciprocal(const Jet& a) {
  const double c = a.value();
  if (std::abs(c) < kSingularityFloor * std::max(1.0, max_abs_coeff(a))) {
    throw DegenerateValue("reciprocal: constant term below singularity floor");
  }
  std::vector<double> series(a.order() + 1);
  series[0] = 1.0 / c;
  for (int k = 1; k <= a.order(); ++k) series[k] = -series[k - 1] / c;
  return compose_univariate(series, a);
}

Jet sin(const Jet& a) {
  const double c = a.value();
  const double table[4] = {std::sin(c), std::cos(c), -std::sin(c), -std::cos(c)};
  std::vector<double> series(a.order() + 1);
  double fact = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 1) fact *= k;
    series[k] = table[k % 4] / (k <= 1 ? 1.0 : fact);
  }
  return compose_univariate(series, a);
}

Jet cos(const Jet& a) {
  const double c = a.value();
  const double table[4] = {std::cos(c), -std::sin(c), -std::cos(c), std::sin(c)};
  std::vector<double> series(a.order() + 1);
  double fact = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 1) fact *= k;
    series[k] = table[k % 4] / (k <= 1 ? 1.0 : fact);
  }
  return compose_univariate(series, a);
}

Jet exp(const Jet& a) {
  std::vector<double> series(a.order() + 1);
  series[0] = std::exp(a.value());
  for (int k = 1; k <= a.order(); ++k) series[k] = series[k - 1] / k;
  return compose_univariate(series, a);
}

Jet log(const Jet& a) {
  const double c = a.value();
  if (c <= 0.0) throw DomainError("log: non-positive constant term");
  std::vector<double> series(a.order() + 1);
  series[0] = std::log(c);
  for (int k = 1; k <= a.order(); ++k) {
    series[k] = (k % 2 ? 1.0 : -1.0) / (k * std::pow(c, k));
  }
  return compose_univariate(series, a);
}

Jet sqrt(const Jet& a) {
  const double c = a.value();
  if (c <= 0.0) throw DomainError("sqrt: non-positive constant term");
  if (c < kSingularityFloor * std::max(1.0, max_abs_coeff(a))) {
    throw DegenerateValue("sqrt: constant term below singularity floor");
  }
  std::vector<double> series(a.order() + 1);
  series[0] = std::sqrt(c);
  for (int k = 1; k <= a.order(); ++k) {
    series[k] = series[k - 1] * (0.5 - (k - 1)) / (static_cast<double>(k) * c);
  }
  return compose_univariate(series, a);
}

Jet pow(const Jet& a, double p) {
  const double c = a.value();
  if (c <= 0.0) throw DomainError("pow: non-positive constant term");
  std::vector<double> series(a.order() + 1);
  series[0] = std::pow(c, p);
  for (int k = 1; k <= a.order(); ++k) {
    series[k] = series[k - 1] * (p - (k - 1)) / (static_cast<double>(k) * c);
  }
  return compose_univariate(series, a);
}

Jet powi(const Jet& a, int k) {
  if (k < 0) return reciprocal(powi(a, -k));
  Jet out = Jet::constant(a.num_vars(), a.order(), 1.0);
  Jet base = a;
  int e = k;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return out;
}

Jet partial(const Jet& a, int index) {
  if (a.order() < 1) throw OrderExhausted("partial: jet order exhausted");
  if (index < 0 || index >= a.num_vars()) throw Error("partial: index out of range");
  auto& t = tables(a.num_vars());
  const auto& plan = deriv_plan(t, a.order(), index);
  Jet out(a.num_vars(), a.order() - 1);
  for (std::size_t p = 0; p < plan.src.size(); ++p) {
    out.coeffs_[p] = plan.fac[p] * a.coeffs_[plan.src[p]];
  }
  return out;
}

}  // namespace wte
