// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

// Prints the zero-point/thermal Brillouin ratio for water across the visible
// and near-UV, backscattering at room temperature, plus the equal-time
// correlator at a few nanometres.

#include <cstdio>

#include "fluctus/fluctus.hpp"

int main() {
  using namespace fluctus;
  const auto water = builtin_material("water");

  std::printf("%-12s %-14s %-12s\n", "lambda[nm]", "omega[rad/s]", "R");
  for (double nm : {250.0, 300.0, 350.0, 400.0, 500.0, 633.0}) {
    ScatteringConfig cfg;
    cfg.omega = ScatteringConfig::omega_from_wavelength(nm * 1e-9);
    cfg.theta = pi;
    std::printf("%-12g %-14.6g %-12.6g\n", nm, cfg.omega, ratio_zp_thermal(water, cfg));
  }

  std::printf("\n%-8s %-16s %-16s\n", "r[nm]", "closed[kg2/m6]", "oracle[kg2/m6]");
  for (double nm : {1.0, 2.0, 5.0}) {
    const double r = nm * 1e-9;
    std::printf("%-8g %-16.9g %-16.9g\n", nm, equal_time_correlator(water, r).value,
                extrapolated_correlator(water, r, 0.0).value);
  }
}
