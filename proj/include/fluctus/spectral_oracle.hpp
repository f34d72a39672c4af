// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

// Numerical evaluation of the density correlator straight from its mode
// integral, independent of the closed forms in correlator.hpp.
//
// After the angular integration the mode integral becomes
//
//   C(r, dt) = hbar rho0 / (4 pi^2 cS r) * Re Int_0^inf q^2 sin(q r) e^{-q (eps + i cS dt)} dq
//
// which only converges with the damping e^{-eps q}. We integrate at a
// sequence of damping lengths and extrapolate eps -> 0 polynomially in
// eps^2 (the regulated value is even in eps).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fluctus/constants.hpp"
#include "fluctus/correlator.hpp"
#include "fluctus/medium.hpp"
#include "fluctus/quadrature.hpp"

namespace fluctus {

struct RegulatorSchedule {
  std::vector<double> epsilons;  // m, strictly decreasing
  double quadTol = 1e-10;
  int extrapOrder = 3;

  /// Throws PreconditionError if the schedule is unusable for distance r.
  void check(double r) const {
    if (epsilons.size() < 3) throw PreconditionError("regulator schedule needs at least 3 damping lengths");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
      const double e = epsilons[i];
      if (!(e > 0.0)) throw PreconditionError("damping lengths must be > 0");
      if (i > 0 && !(e < epsilons[i - 1]))
        throw PreconditionError("damping lengths must be strictly decreasing");
      if (!(e * 10.0 <= r)) throw PreconditionError("damping lengths must be at most r/10");
    }
    if (!(quadTol > 0.0 && quadTol <= 1e-6)) throw PreconditionError("quadTol must lie in (0, 1e-6]");
    if (extrapOrder < 1 || static_cast<std::size_t>(extrapOrder) >= epsilons.size())
      throw PreconditionError("extrapOrder must be >= 1 and < number of damping lengths");
  }

  /// eps = l * {1/16, 1/32, 1/64, 1/128}, where l = min(r, |r - cS|dt||) is
  /// the distance from the target to the nearest pole of the regulated value
  /// in the complex eps-plane. At equal times l = r.
  static RegulatorSchedule standard(const FluidMedium& m, double r, double dt) {
    const double l = std::min(r, std::abs(r - m.cS() * std::abs(dt)));
    RegulatorSchedule s;
    for (double d : {16.0, 32.0, 64.0, 128.0}) s.epsilons.push_back(l / d);
    return s;
  }
};

struct RegulatedValue {
  double value = 0.0;  // kg^2/m^6
  double error = 0.0;  // absolute quadrature error estimate
  std::size_t evaluations = 0;
};

/// Closed form of the damped integral, Int q^2 sin(qr) e^{-sq} dq =
/// 2 r (3 s^2 - r^2) / (s^2 + r^2)^3 with s = eps + i cS dt, times the
/// prefactor. This is the check on the quadrature, not on the correlator.
inline double damped_closed_form(const FluidMedium& m, double r, double dt, double eps) {
  const std::complex<double> s{eps, m.cS() * dt};
  const auto s2 = s * s;
  const double r2 = r * r;
  const auto d = s2 + r2;
  const auto g = 2.0 * r * (3.0 * s2 - r2) / (d * d * d);
  return PhysicalConstants::hbar * m.rho0() / (4.0 * pi * pi * m.cS() * r) * g.real();
}

/// Regulated correlator at a single damping length, by adaptive quadrature.
/// Throws ConvergenceError when a panel cannot reach its tolerance.
inline RegulatedValue regulated_integrand_reduction(const FluidMedium& m, double r, double dt, double eps,
                                                    double quadTol = 1e-10) {
  if (!(r > 0.0)) throw PreconditionError("r must be > 0");
  if (!(eps > 0.0)) throw PreconditionError("eps must be > 0");
  if (!(quadTol > 0.0)) throw PreconditionError("quadTol must be > 0");

  // Work in u = q r: Int_0^inf u^2 sin(u) cos(w u) e^{-k u} du / r^3.
  const double k = eps / r;
  const double w = m.cS() * std::abs(dt) / r;
  auto f = [k, w](double u) { return u * u * std::sin(u) * std::cos(w * u) * std::exp(-k * u); };

  // Cut where u^2 e^{-k u} has dropped below 1e-14 of its peak (4/k^2) e^{-2}.
  const double floor_log = std::log(1e14 * std::exp(2.0) / 4.0);
  double x = 40.0;
  for (int i = 0; i < 50; ++i) x = floor_log + 2.0 * std::log(x);
  const double u_max = x / k;

  // Panels between consecutive zeros of the faster of the two oscillations.
  const double width = pi / std::max(1.0, w);
  const auto n_panels = static_cast<std::size_t>(std::ceil(u_max / width));
  std::vector<double> breaks(n_panels + 1);
  for (std::size_t i = 0; i <= n_panels; ++i) breaks[i] = width * static_cast<double>(i);

  // First pass fixes the scale of the answer; second pass meets quadTol relative to it.
  const auto rough = integrate_panels(f, breaks, 1e-6 * (4.0 / (k * k * k)), 10);
  const double target = quadTol * std::max(std::abs(rough.value), 1e-300);
  const auto fine = integrate_panels(f, breaks, target, 30);
  if (!fine.converged)
    throw ConvergenceError("regulated spectral integral did not converge within the panel budget",
                           fine.error / std::max(std::abs(fine.value), 1e-300));

  const double scale = PhysicalConstants::hbar * m.rho0() / (4.0 * pi * pi * m.cS() * r) / (r * r * r);
  return {scale * fine.value, std::abs(scale) * fine.error, rough.evaluations + fine.evaluations};
}

struct ExtrapolatedValue {
  double value = 0.0;     // kg^2/m^6
  double estimate = 0.0;  // |highest order - next lower order|, absolute
  std::vector<double> regulated;  // one per damping length in the schedule
};

/// Extrapolates the regulated correlator to eps = 0 using the last
/// extrapOrder + 1 (smallest) damping lengths of the schedule.
inline ExtrapolatedValue extrapolated_correlator(const FluidMedium& m, double r, double dt,
                                                 const RegulatorSchedule& sched) {
  detail::require_off_cone(Separation{r, dt}, m.cS());
  sched.check(r);
  ExtrapolatedValue out;
  out.regulated.reserve(sched.epsilons.size());
  for (double e : sched.epsilons) out.regulated.push_back(regulated_integrand_reduction(m, r, dt, e, sched.quadTol).value);

  const std::size_t used = static_cast<std::size_t>(sched.extrapOrder) + 1;
  const std::size_t first = sched.epsilons.size() - used;
  std::vector<double> x, y;
  for (std::size_t i = first; i < sched.epsilons.size(); ++i) {
    x.push_back(sqr(sched.epsilons[i] / r));
    y.push_back(out.regulated[i]);
  }
  const auto ex = neville_to_zero(x, y);
  out.value = ex.value;
  out.estimate = ex.estimate;
  if (ex.estimate > 100.0 * sched.quadTol * std::abs(ex.value))
    throw ConvergenceError("eps -> 0 extrapolation did not settle", ex.estimate / std::abs(ex.value));
  return out;
}

inline ExtrapolatedValue extrapolated_correlator(const FluidMedium& m, double r, double dt) {
  return extrapolated_correlator(m, r, dt, RegulatorSchedule::standard(m, r, dt));
}

}  // namespace fluctus
