// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

// Closed-form density correlators of the phonon vacuum, with linear
// dispersion Omega_q = cS q:
//
//   <rho(x,t) rho(x',t')> = -(hbar rho0 / 2 pi^2 cS) (r^2 + 3 cS^2 dt^2) / (r^2 - cS^2 dt^2)^3
//
// A variant with 3 cS^2 dt^2 in the denominator as well circulates; it does
// not reduce from the mode integral and puts the pole off the sound cone.
// `three_cs_denominator_variant` keeps it for the oracle comparison in the
// acceptance suite.

#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fluctus/constants.hpp"
#include "fluctus/error.hpp"
#include "fluctus/medium.hpp"

namespace fluctus {

enum class Regime { spacelike, timelike, on_cone, coincident };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::spacelike: return "spacelike";
    case Regime::timelike: return "timelike";
    case Regime::on_cone: return "on-cone";
    case Regime::coincident: return "coincident";
  }
  return "?";
}

/// Relative width of the band around r = c|dt| treated as "on the cone".
inline constexpr double kConeTolerance = 1e-5;

/// Distance and time lag between two points in the fluid.
struct Separation {
  double r = 0.0;   // m
  double dt = 0.0;  // s

  /// Classification against a propagation speed (cS, or c for the analog).
  Regime regime(double speed) const {
    const double ct = speed * std::abs(dt);
    if (r == 0.0 && dt == 0.0) return Regime::coincident;
    if (std::abs(r - ct) <= kConeTolerance * std::max(r, ct)) return Regime::on_cone;
    return r > ct ? Regime::spacelike : Regime::timelike;
  }
  Regime regime(const FluidMedium& m) const { return regime(m.cS()); }
};

/// Correlator result; `value` in kg^2/m^6.
struct CorrelatorValue {
  double value = 0.0;
  std::string formula;  // "vacuum-correlator", "equal-time", "planar-wall-shift", "image-term"
  std::string medium;
  Separation sep;

  static constexpr const char* unit = "kg^2/m^6";
};

namespace detail {

inline void require_off_cone(const Separation& s, double speed) {
  if (!(s.r >= 0.0) || !std::isfinite(s.r) || !std::isfinite(s.dt))
    throw PreconditionError("separation must have finite r >= 0");
  switch (s.regime(speed)) {
    case Regime::coincident:
      throw SingularityError("coincident points: correlator diverges at r = 0, dt = 0");
    case Regime::on_cone:
      throw SingularityError("on sound cone: r = c|dt| is a pole of the correlator");
    default: break;
  }
}

// (r^2 + 3 v^2 dt^2) / (r^2 - v^2 dt^2)^3
inline double cone_shape(double r, double dt, double v) {
  const double r2 = r * r;
  const double t2 = sqr(v * dt);
  const double d = r2 - t2;
  return (r2 + 3.0 * t2) / (d * d * d);
}

}  // namespace detail

/// hbar rho0 / (2 pi^2 cS), the prefactor shared by every closed form here.
inline double correlator_prefactor(const FluidMedium& m) {
  return PhysicalConstants::hbar * m.rho0() / (2.0 * pi * pi * m.cS());
}

/// Vacuum density correlator at separation (r, dt). Negative outside the
/// sound cone (anticorrelated), positive inside.
inline CorrelatorValue correlator(const FluidMedium& m, const Separation& sep) {
  detail::require_off_cone(sep, m.cS());
  const double v = -correlator_prefactor(m) * detail::cone_shape(sep.r, sep.dt, m.cS());
  return {v, sep.dt == 0.0 ? "equal-time" : "vacuum-correlator", m.name(), sep};
}

/// Equal-time limit, -hbar rho0 / (2 pi^2 cS r^4). Same arithmetic path as
/// correlator(m, {r, 0}), so the two agree bit for bit.
inline CorrelatorValue equal_time_correlator(const FluidMedium& m, double r) {
  if (r == 0.0) throw SingularityError("coincident points: equal-time correlator diverges at r = 0");
  if (!(r > 0.0)) throw PreconditionError("r must be > 0");
  return correlator(m, Separation{r, 0.0});
}

/// The denominator (r^2 - 3 cS^2 dt^2)^3 variant, for comparison only.
inline double three_cs_denominator_variant(const FluidMedium& m, const Separation& sep) {
  const double r2 = sep.r * sep.r;
  const double t2 = sqr(m.cS() * sep.dt);
  const double d = r2 - 3.0 * t2;
  return -correlator_prefactor(m) * (r2 + 3.0 * t2) / (d * d * d);
}

/// <phi_dot phi_dot> of a massless scalar field with propagation speed
/// `speed`, in units where the field correlator is hbar c / (4 pi^2 sigma).
/// Setting speed = cS gives correlator * cS^4 / rho0.
inline double scalar_field_analog(double speed, const Separation& sep) {
  if (!(speed > 0.0)) throw PreconditionError("propagation speed must be > 0");
  detail::require_off_cone(sep, speed);
  const double c3 = speed * speed * speed;
  return -(PhysicalConstants::hbar * c3 / (2.0 * pi * pi)) * detail::cone_shape(sep.r, sep.dt, speed);
}

/// Renormalized mean-square density shift at distance z from a planar
/// impenetrable (Neumann) wall: -hbar rho0 / (32 pi^2 cS z^4).
inline CorrelatorValue boundary_shift_planar(const FluidMedium& m, double z) {
  if (z == 0.0) throw SingularityError("boundary contact: density shift diverges at z = 0");
  if (!(z > 0.0)) throw PreconditionError("z must be > 0");
  const double z2 = z * z;
  const double v = -PhysicalConstants::hbar * m.rho0() / (32.0 * pi * pi * m.cS() * z2 * z2);
  return {v, "planar-wall-shift", m.name(), Separation{z, 0.0}};
}

/// Two-point correlator next to a Neumann wall at z = 0, split into the
/// free-space term and the image term (image point at -z2, plus sign).
struct BoundaryCorrelator {
  CorrelatorValue direct;
  CorrelatorValue image;
  double total() const { return direct.value + image.value; }
};

/// Only the image term. Finite at coincident field points, where it is the
/// renormalized shift.
inline CorrelatorValue boundary_image_term(const FluidMedium& m, double z1, double z2,
                                           double transverse, double dt) {
  if (!(z1 > 0.0) || !(z2 > 0.0)) throw PreconditionError("both points must lie in the fluid (z > 0)");
  if (!(transverse >= 0.0)) throw PreconditionError("transverse distance must be >= 0");
  const double dz = z1 + z2;
  const Separation img{std::sqrt(transverse * transverse + dz * dz), dt};
  detail::require_off_cone(img, m.cS());
  const double v = -correlator_prefactor(m) * detail::cone_shape(img.r, img.dt, m.cS());
  return {v, "image-term", m.name(), img};
}

inline BoundaryCorrelator boundary_correlator(const FluidMedium& m, double z1, double z2,
                                              double transverse, double dt) {
  auto image = boundary_image_term(m, z1, z2, transverse, dt);
  const double dz = z1 - z2;
  const Separation direct{std::sqrt(transverse * transverse + dz * dz), dt};
  return {correlator(m, direct), std::move(image)};
}

/// Mean-square field shifts near a perfectly reflecting plate, in units of
/// hbar c (Lorentz-Heaviside): <E^2> = -<B^2> = 3 / (16 pi^2 z^4).
struct EmPlateShift {
  double e2 = 0.0;
  double b2 = 0.0;
};

inline EmPlateShift em_vacuum_shift_plate(double z) {
  if (z == 0.0) throw SingularityError("plate contact: field shifts diverge at z = 0");
  if (!(z > 0.0)) throw PreconditionError("z must be > 0");
  const double z2 = z * z;
  const double e2 = 3.0 / (16.0 * pi * pi * z2 * z2);
  return {e2, -e2};
}

/// Per-mode spectral weight of the vacuum density fluctuations,
/// hbar rho0 q / (2 cS), in kg^2/m^3. Linear in q.
inline double zero_point_structure_factor(const FluidMedium& m, double q) {
  if (!(q >= 0.0)) throw PreconditionError("q must be >= 0");
  return PhysicalConstants::hbar * m.rho0() * q / (2.0 * m.cS());
}

}  // namespace fluctus
