// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>

namespace fluctus {

/// Exact SI values (2019 redefinition / CODATA 2018).
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;  // J s
  static constexpr double c = 299792458.0;         // m/s
  static constexpr double kB = 1.380649e-23;       // J/K
};

inline constexpr double pi = std::numbers::pi;

template <typename T>
constexpr T sqr(T v) {
  return v * v;
}

}  // namespace fluctus
