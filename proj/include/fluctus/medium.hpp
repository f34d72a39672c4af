// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fluctus/constants.hpp"
#include "fluctus/error.hpp"

namespace fluctus {

/// Raw material record. May hold invalid data; `validate` reports what is
/// wrong with it and `FluidMedium` only accepts records that pass.
struct MediumProperties {
  std::string name;
  double rho0 = 0.0;      // mean mass density, kg/m^3
  double cS = 0.0;        // speed of sound, m/s
  double eta = 1.0;       // refractive index at the probe frequency
  double epsilon0 = 1.0;  // mean dielectric constant, must equal eta^2
  double drho = 0.0;      // rho0 * (d eps / d rho0)_S, dimensionless
  std::optional<double> cP;      // J/(kg K)
  std::optional<double> dEpsdT;  // (d eps / d T)_P, 1/K
  double defaultT = 295.0;       // K

  bool operator==(const MediumProperties&) const = default;
};

/// Every violated invariant, by name. Empty when the record is usable.
inline std::vector<std::string> validate(const MediumProperties& m) {
  std::vector<std::string> out;
  auto finite = [](double v) { return std::isfinite(v); };
  if (!(finite(m.rho0) && m.rho0 > 0)) out.emplace_back("rho0 > 0");
  if (!(finite(m.cS) && m.cS > 0)) out.emplace_back("cS > 0");
  if (finite(m.cS) && m.cS >= PhysicalConstants::c) out.emplace_back("cS < c");
  if (!(finite(m.eta) && m.eta >= 1)) out.emplace_back("eta ≥ 1");
  if (!(finite(m.epsilon0) && m.epsilon0 >= 1)) out.emplace_back("epsilon0 ≥ 1");
  if (finite(m.eta) && finite(m.epsilon0) &&
      std::abs(m.epsilon0 - m.eta * m.eta) > 1e-12 * std::max(1.0, m.eta * m.eta))
    out.emplace_back("epsilon0 = eta²");
  if (!finite(m.drho)) out.emplace_back("drho finite");
  if (!(finite(m.defaultT) && m.defaultT > 0)) out.emplace_back("defaultT > 0");
  if (m.cP && !(finite(*m.cP) && *m.cP > 0)) out.emplace_back("cP > 0");
  if (m.dEpsdT && !finite(*m.dEpsdT)) out.emplace_back("dEpsdT finite");
  if (m.name.empty()) out.emplace_back("name non-empty");
  return out;
}

/// A validated, immutable fluid. Construction throws ValidationError listing
/// every violation, so downstream code never sees an invalid medium.
class FluidMedium {
 public:
  explicit FluidMedium(MediumProperties p) : p_(std::move(p)) {
    if (auto v = validate(p_); !v.empty()) throw ValidationError(std::move(v));
  }

  /// Builds a record with epsilon0 = eta^2.
  static FluidMedium make(std::string name, double rho0, double cS, double eta, double drho,
                          std::optional<double> cP = std::nullopt,
                          std::optional<double> dEpsdT = std::nullopt, double defaultT = 295.0) {
    return FluidMedium(MediumProperties{std::move(name), rho0, cS, eta, eta * eta, drho, cP,
                                        dEpsdT, defaultT});
  }

  const MediumProperties& props() const noexcept { return p_; }
  const std::string& name() const noexcept { return p_.name; }
  double rho0() const noexcept { return p_.rho0; }
  double cS() const noexcept { return p_.cS; }
  double eta() const noexcept { return p_.eta; }
  double epsilon0() const noexcept { return p_.epsilon0; }
  double drho() const noexcept { return p_.drho; }
  double defaultT() const noexcept { return p_.defaultT; }

  double cP() const {
    if (!p_.cP) throw MissingPropertyError("cp_j_kg_k");
    return *p_.cP;
  }
  double dEpsdT() const {
    if (!p_.dEpsdT) throw MissingPropertyError("depsilon_dt_per_k");
    return *p_.dEpsdT;
  }
  bool has_cP() const noexcept { return p_.cP.has_value(); }
  bool has_dEpsdT() const noexcept { return p_.dEpsdT.has_value(); }

  bool operator==(const FluidMedium&) const = default;

 private:
  MediumProperties p_;
};

inline std::vector<std::string> builtin_material_names() { return {"water"}; }

/// Water at room temperature. cS, eta and drho are the literature values used
/// for the zero-point/thermal ratio; rho0 = 997 kg/m^3 is a standard table
/// value (it cancels in that ratio).
inline FluidMedium builtin_material(std::string_view name) {
  if (name == "water") return FluidMedium::make("water", 997.0, 1480.0, 1.4, 0.79);
  std::string msg = "unknown material '" + std::string(name) + "'; available:";
  for (const auto& n : builtin_material_names()) msg += " " + n;
  throw PreconditionError(msg);
}

}  // namespace fluctus
