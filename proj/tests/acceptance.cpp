// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance criteria. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "fluctus/fluctus.hpp"

using namespace fluctus;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool fast = s < budget_s;
  const bool ok = o.pass && fast;
  if (!ok) ++failures;
  std::printf("%s  C%d %s: %s; runtime %.3f s (budget %.0f s)%s\n", ok ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), s, budget_s, fast ? "" : " OVER BUDGET");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double slope(const std::function<double(double)>& f, double x0, double x1) {
  return std::log(f(x1) / f(x0)) / std::log(x1 / x0);
}

}  // namespace

int main() {
  const auto water = builtin_material("water");

  criterion(1, "water zero-point/thermal ratio", 1.0, [&] {
    std::ostringstream out, err;
    const int code = cli::run({"--format", "json", "ratio", "--material", "water", "--lambda", "350e-9", "--theta",
                               "180", "--temperature", "295"},
                              out, err);
    if (code != 0) return Outcome{false, "cli exit " + std::to_string(code) + ": " + err.str()};
    const double R = nlohmann::json::parse(out.str())[0]["value"].get<double>();
    const double band = std::abs(R - 0.005);
    const double vs43 = std::abs(R - 4.3e-3) / 4.3e-3;
    return Outcome{band <= 0.0015 && vs43 <= 0.02, "R = " + fmt("%.6g", R) + ", |R - 0.005| = " + fmt("%.2g", band) +
                                                       " (<= 0.0015), |R/4.3e-3 - 1| = " + fmt("%.3g", vs43) +
                                                       " (<= 0.02)"};
  });

  criterion(2, "closed-form correlator vs regulated mode integral", 30.0, [&] {
    const auto checks = verify_spectral(water, 1e-9);
    return Outcome{checks[0].pass && checks[1].pass,
                   "max rel deviation " + fmt("%.3g", checks[0].achieved) + " (<= 1e-6) over 40 separations, " +
                       "3 cS^2 dt^2 variant max deviation " + fmt("%.3g", checks[1].achieved) + " (> 0.1)"};
  });

  criterion(3, "golden-rule chain identity", 1.0, [&] {
    const auto checks = verify_chain();
    return Outcome{checks[0].pass && checks[1].pass,
                   "chain vs closed form " + fmt("%.3g", checks[0].achieved) + " (<= 1e-12), V dependence " +
                       fmt("%.3g", checks[1].achieved) + " (<= 1e-12), 100 configs"};
  });

  criterion(4, "omega' -> omega reduction", 1.0, [&] {
    std::mt19937_64 rng(4040);
    double worst = 0.0;  // max of |1 - reduced/exact| / (4 Omega_q / omega)
    for (int i = 0; i < 100; ++i) {
      const auto m = random_medium(rng);
      const auto cfg = random_config(rng, false);
      const auto k = phonon_kinematics(m, cfg);
      const double dev = std::abs(1.0 - zp_cross_section_reduced(m, cfg).value / zp_cross_section_exact(m, cfg).value);
      worst = std::max(worst, dev / (4.0 * k.OmegaQ / cfg.omega));
    }
    return Outcome{worst <= 1.0, "max |1 - reduced/exact| / (4 Omega_q/omega) = " + fmt("%.4g", worst) +
                                     " (<= 1), 100 configs"};
  });

  criterion(5, "image term equals wall shift", 1.0, [&] {
    std::mt19937_64 rng(5050);
    std::uniform_real_distribution<double> lz(std::log(1e-10), std::log(1e-4));
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double z = std::exp(lz(rng));
      const double img = boundary_image_term(water, z, z, 0.0, 0.0).value;
      const double shift = boundary_shift_planar(water, z).value;
      worst = std::max(worst, std::abs(img - shift) / std::abs(shift));
    }
    return Outcome{worst <= 1e-12, "max rel deviation " + fmt("%.3g", worst) + " (<= 1e-12), 20 z"};
  });

  criterion(6, "sign structure across the sound cone", 1.0, [&] {
    std::mt19937_64 rng(6060);
    std::uniform_real_distribution<double> lr(std::log(1e-10), std::log(1e-5)), u(0.0, 1.0);
    int wrong_space = 0, wrong_time = 0;
    for (int i = 0; i < 1000; ++i) {
      const double r = std::exp(lr(rng));
      const double x = 0.999 * u(rng);
      if (!(correlator(water, {r, x * r / water.cS()}).value < 0.0)) ++wrong_space;
    }
    for (int i = 0; i < 1000; ++i) {
      const double r = std::exp(lr(rng));
      const double x = 1.001 + 9.0 * u(rng);
      if (!(correlator(water, {r, (u(rng) < 0.5 ? -1.0 : 1.0) * x * r / water.cS()}).value > 0.0)) ++wrong_time;
    }
    return Outcome{wrong_space == 0 && wrong_time == 0, std::to_string(1000 - wrong_space) +
                                                            "/1000 spacelike negative, " +
                                                            std::to_string(1000 - wrong_time) +
                                                            "/1000 timelike positive"};
  });

  criterion(7, "scaling laws", 5.0, [&] {
    const double cs = water.cS();
    const Separation s{1e-9, 0.4e-9 / cs}, t{1e-9, 2.0e-9 / cs};
    const double hom_s = slope([&](double l) { return -correlator(water, {l * s.r, l * s.dt}).value; }, 1.0, 10.0);
    const double hom_t = slope([&](double l) { return correlator(water, {l * t.r, l * t.dt}).value; }, 1.0, 10.0);
    ScatteringConfig cfg;
    cfg.theta = pi;
    cfg.T = 295.0;
    auto at = [&](double omega, double T) {
      auto c = cfg;
      c.omega = omega;
      c.T = T;
      return c;
    };
    const double w0 = ScatteringConfig::omega_from_wavelength(2e-6);
    const double s5 = slope([&](double w) { return zp_cross_section_exact(water, at(w, 295.0)).value; }, w0, 10 * w0);
    const double sw = slope([&](double w) { return ratio_zp_thermal(water, at(w, 295.0)); }, w0, 10 * w0);
    const double sT = slope([&](double T) { return ratio_zp_thermal(water, at(w0, T)); }, 30.0, 300.0);
    const bool ok = std::abs(hom_s + 4) <= 1e-9 && std::abs(hom_t + 4) <= 1e-9 && std::abs(s5 - 5) <= 1e-3 &&
                    std::abs(sw - 1) <= 1e-3 && std::abs(sT + 1) <= 1e-3;
    return Outcome{ok, "correlator degree " + fmt("%.6f", hom_s) + " / " + fmt("%.6f", hom_t) +
                           ", cross section vs omega " + fmt("%.6f", s5) + " (5 +- 0.001), R vs omega " +
                           fmt("%.6f", sw) + ", R vs T " + fmt("%.6f", sT) + " (+-1 +- 0.001)"};
  });

  criterion(8, "finite-volume lattice convergence", 180.0, [&] {
    const auto table = convergence_study(water, StudyGeometry::standard(8e-9), {64, 128, 256});
    bool monotone = true;
    std::string errs;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (i > 0) monotone = monotone && table.rows[i].rel_error < table.rows[i - 1].rel_error;
      errs += (i ? ", " : "") + fmt("%.3g", table.rows[i].rel_error);
    }
    const bool in_band = std::abs(table.slope - kLatticeSlopeCenter) <= kLatticeSlopeHalfWidth;
    return Outcome{monotone && in_band, "errors " + errs + " at N = 64, 128, 256 (monotone: " +
                                            (monotone ? "yes" : "no") + "), slope " + fmt("%.3f", table.slope) +
                                            " (band " + fmt("%.1f", kLatticeSlopeCenter) + " +- " +
                                            fmt("%.1f", kLatticeSlopeHalfWidth) + ")"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
