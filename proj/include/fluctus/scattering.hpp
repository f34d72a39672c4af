// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

// Light scattering by density fluctuations.
//
// Cross sections are differential (per steradian) and per unit scattering
// volume, in 1/(m sr); multiply by the illuminated volume for dsigma/dOmega.
// The zero-point channel emits a phonon (Stokes side only). It is assembled
// here two ways: from the first-order golden-rule ingredients, and from the
// closed result the ingredients reduce to.

#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "fluctus/constants.hpp"
#include "fluctus/error.hpp"
#include "fluctus/medium.hpp"

namespace fluctus {

enum class Polarization { perpendicular, parallel, crossed, unpolarized };

inline const char* to_string(Polarization p) {
  switch (p) {
    case Polarization::perpendicular: return "perpendicular";
    case Polarization::parallel: return "parallel";
    case Polarization::crossed: return "crossed";
    case Polarization::unpolarized: return "unpolarized";
  }
  return "?";
}

inline std::optional<Polarization> parse_polarization(const std::string& s) {
  if (s == "perpendicular") return Polarization::perpendicular;
  if (s == "parallel") return Polarization::parallel;
  if (s == "crossed") return Polarization::crossed;
  if (s == "unpolarized") return Polarization::unpolarized;
  return std::nullopt;
}

struct ScatteringConfig {
  double omega = 0.0;  // incident angular frequency, 2 pi c / lambda_vacuum
  double theta = pi;   // scattering angle, rad, in (0, pi]
  Polarization pol = Polarization::perpendicular;
  std::optional<double> T;  // K; falls back to the medium's default
  bool in_medium_momentum = false;  // multiply Omega_q by eta (see phonon_kinematics)

  static double omega_from_wavelength(double lambda) {
    if (!(lambda > 0.0)) throw PreconditionError("wavelength must be > 0");
    return 2.0 * pi * PhysicalConstants::c / lambda;
  }

  void check() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw PreconditionError("omega must be > 0");
    if (!(theta > 0.0 && theta <= pi)) throw PreconditionError("theta must lie in (0, pi]");
    if (T && !(*T > 0.0)) throw PreconditionError("temperature must be > 0");
  }
  double temperature(const FluidMedium& m) const { return T.value_or(m.defaultT()); }
};

struct Kinematics {
  double omegaPrime = 0.0;  // scattered frequency, rad/s
  double OmegaQ = 0.0;      // emitted phonon frequency, rad/s
  double q = 0.0;           // phonon wavenumber, 1/m
};

struct CrossSectionValue {
  double value = 0.0;      // 1/(m sr)
  std::string formula;
  double polFactor = 0.0;  // (e.e')^2

  static constexpr const char* unit = "1/(m sr)";
};

/// sqrt(2 (1 - cos theta)) = 2 sin(theta/2).
inline double angular_factor(double theta) { return 2.0 * std::sin(0.5 * theta); }

/// Phonon emitted in Stokes scattering. Omega_q = 2 sin(theta/2) (cS/c) omega,
/// optionally times eta when the in-medium photon wavevector is used. The
/// returned frequencies satisfy omega == omegaPrime + OmegaQ exactly.
inline Kinematics phonon_kinematics(const FluidMedium& m, const ScatteringConfig& cfg) {
  cfg.check();
  double raw = angular_factor(cfg.theta) * (m.cS() / PhysicalConstants::c) * cfg.omega;
  if (cfg.in_medium_momentum) raw *= m.eta();
  Kinematics k;
  k.omegaPrime = cfg.omega - raw;
  k.OmegaQ = cfg.omega - k.omegaPrime;
  k.q = k.OmegaQ / m.cS();
  return k;
}

/// (e.e')^2 with polarizations referred to the scattering plane; unpolarized
/// averages the incident and sums the final linear states.
inline double polarization_factor(double theta, Polarization pol) {
  if (!(theta > 0.0 && theta <= pi)) throw PreconditionError("theta must lie in (0, pi]");
  const double c = std::cos(theta);
  switch (pol) {
    case Polarization::perpendicular: return 1.0;
    case Polarization::parallel: return c * c;
    case Polarization::crossed: return 0.0;
    case Polarization::unpolarized: return 0.5 * (1.0 + c * c);
  }
  return 0.0;
}

// --- golden-rule ingredients -------------------------------------------------

/// |<f|H'|i>|^2 for one photon scattering off the vacuum with emission of
/// one phonon, in J^2, in a quantization box of volume V.
inline double matrix_element_sq(const FluidMedium& m, double omega, double omegaPrime, double OmegaQ,
                                double V, double polFactor) {
  if (!(omega > 0 && omegaPrime > 0 && OmegaQ > 0 && V > 0))
    throw PreconditionError("frequencies and volume must be > 0");
  const double hb = PhysicalConstants::hbar;
  return hb * hb * hb * omega * omegaPrime * OmegaQ / (8.0 * V * m.rho0() * m.cS() * m.cS()) * polFactor;
}

/// Photon final states per unit energy per steradian in volume V.
inline double density_of_states(double omegaPrime, double epsilon0, double V) {
  if (!(omegaPrime > 0 && epsilon0 > 0 && V > 0)) throw PreconditionError("inputs must be > 0");
  const double tpc = 2.0 * pi * PhysicalConstants::c;
  return V * omegaPrime * omegaPrime * std::pow(epsilon0, 1.5) / (PhysicalConstants::hbar * tpc * tpc * tpc);
}

/// Flux of a single photon in volume V, c / (V sqrt(eps0)).
inline double incident_flux(double epsilon0, double V) {
  if (!(epsilon0 > 0 && V > 0)) throw PreconditionError("inputs must be > 0");
  return PhysicalConstants::c / (V * std::sqrt(epsilon0));
}

/// Zero-point cross section from transition rate / flux, per unit volume.
/// `V` is the quantization (= scattering) volume; it cancels.
inline CrossSectionValue zp_cross_section_chain(const FluidMedium& m, const ScatteringConfig& cfg,
                                                double V = 1.0) {
  const auto k = phonon_kinematics(m, cfg);
  const double pf = polarization_factor(cfg.theta, cfg.pol);
  const double rate = 2.0 * pi / PhysicalConstants::hbar *
                      matrix_element_sq(m, cfg.omega, k.omegaPrime, k.OmegaQ, V, pf) *
                      density_of_states(k.omegaPrime, m.epsilon0(), V);
  const double dsigma = rate / incident_flux(m.epsilon0(), V);
  return {dsigma / V, "zp-golden-rule-chain", pf};
}

// --- closed forms --------------------------------------------------------------

/// hbar omega omega'^3 Omega_q eta^4 / (32 pi^2 c^4 cS^2 rho0) (e.e')^2.
inline CrossSectionValue zp_cross_section_exact(const FluidMedium& m, const ScatteringConfig& cfg) {
  const auto k = phonon_kinematics(m, cfg);
  const double pf = polarization_factor(cfg.theta, cfg.pol);
  const double c = PhysicalConstants::c;
  const double eta4 = sqr(sqr(m.eta()));
  const double v = PhysicalConstants::hbar * cfg.omega * k.omegaPrime * k.omegaPrime * k.omegaPrime * k.OmegaQ *
                   eta4 / (32.0 * pi * pi * sqr(sqr(c)) * sqr(m.cS()) * m.rho0()) * pf;
  return {v, "zp-exact", pf};
}

/// The omega' -> omega form: 2 sin(theta/2) hbar omega^5 eta^4 / (32 pi^2 c^5 cS rho0) (e.e')^2.
inline CrossSectionValue zp_cross_section_reduced(const FluidMedium& m, const ScatteringConfig& cfg) {
  cfg.check();
  const double pf = polarization_factor(cfg.theta, cfg.pol);
  const double c = PhysicalConstants::c;
  const double w = cfg.omega;
  const double eta4 = sqr(sqr(m.eta()));
  const double v = angular_factor(cfg.theta) * PhysicalConstants::hbar * sqr(sqr(w)) * w * eta4 /
                   (32.0 * pi * pi * sqr(sqr(c)) * c * m.cS() * m.rho0()) * pf;
  return {v, "zp-reduced", pf};
}

/// beta_S = 1 / (rho0 cS^2), in 1/Pa.
inline double adiabatic_compressibility(const FluidMedium& m) { return 1.0 / (m.rho0() * sqr(m.cS())); }

/// Thermal Brillouin (both phonon lines): omega^4 kB T drho^2 / (16 pi^2 c^4 cS^2 rho0) (e.e')^2.
inline CrossSectionValue thermal_brillouin_cross_section(const FluidMedium& m, const ScatteringConfig& cfg) {
  cfg.check();
  const double pf = polarization_factor(cfg.theta, cfg.pol);
  const double T = cfg.temperature(m);
  const double v = sqr(sqr(cfg.omega)) * PhysicalConstants::kB * T * sqr(m.drho()) /
                   (16.0 * pi * pi * sqr(sqr(PhysicalConstants::c)) * sqr(m.cS()) * m.rho0()) * pf;
  return {v, "thermal-brillouin", pf};
}

/// Brillouin term written with the compressibility, beta_S drho^2 omega^4 kB T / (16 pi^2 c^4).
inline CrossSectionValue thermal_brillouin_via_compressibility(const FluidMedium& m,
                                                               const ScatteringConfig& cfg) {
  cfg.check();
  const double pf = polarization_factor(cfg.theta, cfg.pol);
  const double T = cfg.temperature(m);
  const double v = sqr(sqr(cfg.omega)) * PhysicalConstants::kB * T / (16.0 * pi * pi * sqr(sqr(PhysicalConstants::c))) *
                   adiabatic_compressibility(m) * sqr(m.drho()) * pf;
  return {v, "thermal-brillouin-compressibility", pf};
}

/// Rayleigh (entropy fluctuation) term, (T / rho0 cP) (d eps/dT)_P^2 omega^4 kB T / (16 pi^2 c^4).
inline CrossSectionValue thermal_rayleigh_cross_section(const FluidMedium& m, const ScatteringConfig& cfg) {
  cfg.check();
  const double cP = m.cP();
  const double dEdT = m.dEpsdT();
  const double pf = polarization_factor(cfg.theta, cfg.pol);
  const double T = cfg.temperature(m);
  const double v = sqr(sqr(cfg.omega)) * PhysicalConstants::kB * T / (16.0 * pi * pi * sqr(sqr(PhysicalConstants::c))) *
                   (T / (m.rho0() * cP)) * sqr(dEdT) * pf;
  return {v, "thermal-rayleigh", pf};
}

/// Brillouin + Rayleigh. Needs cP and (d eps/dT)_P on the medium.
inline CrossSectionValue thermal_total_cross_section(const FluidMedium& m, const ScatteringConfig& cfg) {
  const auto rayleigh = thermal_rayleigh_cross_section(m, cfg);
  const auto brillouin = thermal_brillouin_cross_section(m, cfg);
  return {brillouin.value + rayleigh.value, "thermal-total", brillouin.polFactor};
}

/// Zero-point over thermal Brillouin:
///   R = 2 sin(theta/2) (hbar omega / 2 kB T) (cS / c) eta^4 / drho^2.
inline double ratio_zp_thermal(const FluidMedium& m, const ScatteringConfig& cfg) {
  cfg.check();
  if (m.drho() == 0.0) throw PreconditionError("ratio undefined: depsilon_drho is zero");
  const double T = cfg.temperature(m);
  return angular_factor(cfg.theta) * (PhysicalConstants::hbar * cfg.omega / (2.0 * PhysicalConstants::kB * T)) *
         (m.cS() / PhysicalConstants::c) * sqr(sqr(m.eta())) / sqr(m.drho());
}

}  // namespace fluctus
