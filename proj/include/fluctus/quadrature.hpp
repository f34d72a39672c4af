// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "fluctus/error.hpp"

namespace fluctus {

/// Neumaier (improved Kahan) summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  void add(const CompensatedSum& o) noexcept {
    add(o.sum_);
    add(o.comp_);
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  double l1 = 0.0;     // integral of |f|, for judging cancellation
  std::size_t evaluations = 0;
  bool converged = true;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
QuadratureResult gauss_kronrod15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double s = f1[j] + f2[j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  QuadratureResult r;
  r.value = resk * half;
  r.l1 = resabs * std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (r.l1 > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(50 * eps * r.l1, err);
  r.error = err;
  r.evaluations = 15;
  return r;
}

template <typename F>
void adaptive_gk(const F& f, double a, double b, double tol, int depth, QuadratureResult& acc,
                 CompensatedSum& sum) {
  auto r = gauss_kronrod15(f, a, b);
  acc.evaluations += r.evaluations;
  // Bisecting cannot beat the rounding floor of the rule itself; the error
  // heuristic hovers a few times above it once the integrand is resolved.
  const bool rounding_limited = r.error <= 200 * std::numeric_limits<double>::epsilon() * r.l1;
  if (r.error <= tol || rounding_limited || depth == 0) {
    if (r.error > tol && !rounding_limited) acc.converged = false;
    sum.add(r.value);
    acc.error += r.error;
    acc.l1 += r.l1;
    return;
  }
  const double mid = 0.5 * (a + b);
  adaptive_gk(f, a, mid, 0.5 * tol, depth - 1, acc, sum);
  adaptive_gk(f, mid, b, 0.5 * tol, depth - 1, acc, sum);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod 7/15 on [a, b] to absolute tolerance `tol`
/// (bisection up to `max_depth` levels). Never throws; check `converged`,
/// which also holds when some subinterval missed its share but the summed
/// error estimate is within `tol` (typical next to endpoint singularities).
template <typename F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, double tol, int max_depth = 30) {
  QuadratureResult acc;
  CompensatedSum sum;
  detail::adaptive_gk(f, a, b, tol, max_depth, acc, sum);
  acc.value = sum.value();
  acc.converged = acc.converged || acc.error <= tol;
  return acc;
}

/// Integrates over consecutive panels [breaks[i], breaks[i+1]]. The total
/// absolute tolerance `tol` is shared in proportion to panel width, but no
/// panel is asked for more than its own rounding floor.
template <typename F>
QuadratureResult integrate_panels(const F& f, std::span<const double> breaks, double tol,
                                  int max_depth = 30) {
  QuadratureResult total;
  if (breaks.size() < 2) return total;
  const double width = breaks.back() - breaks.front();
  CompensatedSum sum;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double share = tol * (breaks[i + 1] - breaks[i]) / width;
    auto r = integrate_adaptive(f, breaks[i], breaks[i + 1], share, max_depth);
    sum.add(r.value);
    total.error += r.error;
    total.l1 += r.l1;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
  }
  total.value = sum.value();
  total.converged = total.converged || total.error <= tol;
  return total;
}

/// Evaluates at x = 0 the polynomial through (x[i], y[i]) (Neville).
/// Also returns |P_n(0) - P_{n-1}(0)|, where P_{n-1} drops the first
/// (largest-x) node.
struct Extrapolation {
  double value = 0.0;
  double estimate = 0.0;
};

inline Extrapolation neville_to_zero(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n) throw PreconditionError("neville_to_zero: need matching, non-empty inputs");
  std::vector<double> p(y.begin(), y.end());
  // After pass m, p[i] holds the value at 0 of the interpolant through nodes i..i+m.
  double lower = p[n - 1];
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i)
      p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    if (m == n - 2) lower = p[1];
  }
  if (n == 1) return {p[0], 0.0};
  if (n == 2) lower = y[1];
  return {p[0], std::abs(p[0] - lower)};
}

}  // namespace fluctus
