// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

// Self-checks run by `fluctus verify`: closed forms against the numerical
// oracles, and the golden-rule assembly against its closed form.

#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fluctus/correlator.hpp"
#include "fluctus/lattice_oracle.hpp"
#include "fluctus/medium.hpp"
#include "fluctus/scattering.hpp"
#include "fluctus/spectral_oracle.hpp"

namespace fluctus {

struct Check {
  std::string suite;
  std::string name;
  double tolerance = 0.0;
  double achieved = 0.0;
  bool pass = false;
};

/// Forty separations at distance r: twenty spacelike with cS|dt|/r evenly
/// spaced in [0.1, 0.95] and twenty timelike in [1.05, 3].
inline std::vector<Separation> standard_separation_grid(const FluidMedium& m, double r) {
  std::vector<Separation> grid;
  for (int i = 0; i < 20; ++i) grid.push_back({r, (0.1 + 0.85 * i / 19.0) * r / m.cS()});
  for (int i = 0; i < 20; ++i) grid.push_back({r, (1.05 + 1.95 * i / 19.0) * r / m.cS()});
  return grid;
}

/// Lattice study slope band against log(r/L), fixed from a brute-force study
/// of the standard geometry (slope 3.98 in every direction tried).
inline constexpr double kLatticeSlopeCenter = 4.0;
inline constexpr double kLatticeSlopeHalfWidth = 0.2;

/// Random fluid with properties spanning common liquids.
inline FluidMedium random_medium(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rho(500.0, 3000.0), cs(300.0, 6000.0), eta(1.0, 2.0), drho(0.1, 2.0);
  return FluidMedium::make("random", rho(rng), cs(rng), eta(rng), drho(rng));
}

inline ScatteringConfig random_config(std::mt19937_64& rng, bool allow_crossed = true) {
  std::uniform_real_distribution<double> loglam(std::log(200e-9), std::log(2e-6)), th(1e-3, pi), T(1.0, 600.0);
  std::uniform_int_distribution<int> pol(0, allow_crossed ? 3 : 2);
  static constexpr Polarization pols[] = {Polarization::perpendicular, Polarization::unpolarized,
                                          Polarization::parallel, Polarization::crossed};
  ScatteringConfig cfg;
  cfg.omega = ScatteringConfig::omega_from_wavelength(std::exp(loglam(rng)));
  cfg.theta = th(rng);
  cfg.pol = pols[pol(rng)];
  // parallel vanishes at theta = pi/2; keep relative comparisons meaningful.
  if (cfg.pol == Polarization::parallel && std::abs(std::cos(cfg.theta)) < 1e-3) cfg.pol = Polarization::perpendicular;
  cfg.T = T(rng);
  return cfg;
}

inline double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

inline std::vector<Check> verify_chain(unsigned long seed = 20260101) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);
  double worst_identity = 0.0, worst_volume = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto m = random_medium(rng);
    const auto cfg = random_config(rng);
    const double chain = zp_cross_section_chain(m, cfg, 1.0).value;
    worst_identity = std::max(worst_identity, rel_diff(chain, zp_cross_section_exact(m, cfg).value));
    worst_volume = std::max(worst_volume, rel_diff(chain, zp_cross_section_chain(m, cfg, 1e-6).value));
  }
  out.push_back({"chain", "golden-rule chain == closed zero-point cross section (100 configs)", 1e-12,
                 worst_identity, worst_identity <= 1e-12});
  out.push_back({"chain", "chain independent of quantization volume (V = 1, 1e-6 m^3)", 1e-12, worst_volume,
                 worst_volume <= 1e-12});
  return out;
}

inline std::vector<Check> verify_spectral(const FluidMedium& m = builtin_material("water"), double r = 1e-9) {
  std::vector<Check> out;
  double worst = 0.0, worst_variant = 0.0;
  for (const auto& s : standard_separation_grid(m, r)) {
    const double closed = correlator(m, s).value;
    const double oracle = extrapolated_correlator(m, s.r, s.dt).value;
    worst = std::max(worst, std::abs(oracle - closed) / std::abs(closed));
    worst_variant = std::max(worst_variant, std::abs(three_cs_denominator_variant(m, s) - oracle) / std::abs(oracle));
  }
  out.push_back({"spectral", "closed-form correlator vs regulated mode integral (40 separations)", 1e-6, worst,
                 worst <= 1e-6});
  out.push_back({"spectral", "3 cS^2 dt^2 denominator variant rejected (max deviation > 10%)", 0.1, worst_variant,
                 worst_variant > 0.1});
  return out;
}

inline std::vector<Check> verify_lattice(const FluidMedium& m = builtin_material("water"), double r = 8e-9) {
  std::vector<Check> out;
  const auto table = convergence_study(m, StudyGeometry::standard(r), {64, 128, 256});
  bool monotone = true;
  double worst_step = 0.0;  // largest ratio err[i+1] / err[i]
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const double ratio = table.rows[i].rel_error / table.rows[i - 1].rel_error;
    worst_step = std::max(worst_step, ratio);
    monotone = monotone && ratio < 1.0;
  }
  out.push_back({"lattice", "finite-volume error decreases over N = 64, 128, 256 (max step ratio)", 1.0,
                 worst_step, monotone});
  const double dev = std::abs(table.slope - kLatticeSlopeCenter);
  out.push_back({"lattice", "log-log slope of error vs r/L within 4.0 +- 0.2 (|slope - 4|)", kLatticeSlopeHalfWidth,
                 dev, dev <= kLatticeSlopeHalfWidth});
  return out;
}

}  // namespace fluctus
