// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

// Finite-volume mode sum for the equal-time density correlator on a periodic
// box of side L with N modes per axis:
//
//   C_L(dx) = hbar rho0 / (2 L^3 cS^2) * sum_q Omega_q cos(q.dx) e^{-eps |q|},
//   q = (2 pi / L) n,  n in [-N/2, N/2)^3 \ {0},  Omega_q = cS |q|.
//
// As L -> infinity (with the cutoff pi N / L well damped) it approaches the
// continuum regulated value from spectral_oracle.hpp.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "fluctus/constants.hpp"
#include "fluctus/error.hpp"
#include "fluctus/medium.hpp"
#include "fluctus/quadrature.hpp"
#include "fluctus/spectral_oracle.hpp"

namespace fluctus {

using Vec3 = std::array<double, 3>;

inline double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

class ModeGrid {
 public:
  ModeGrid(double L, int N) : L_(L), N_(N) {
    if (!(L > 0.0) || !std::isfinite(L)) throw PreconditionError("box side L must be > 0");
    if (N < 8 || N % 2 != 0) throw PreconditionError("modes per axis N must be even and >= 8");
  }

  double L() const noexcept { return L_; }
  int N() const noexcept { return N_; }
  double volume() const noexcept { return L_ * L_ * L_; }
  double spacing() const noexcept { return L_ / N_; }
  double dq() const noexcept { return 2.0 * pi / L_; }
  std::int64_t mode_count() const noexcept {
    const std::int64_t n = N_;
    return n * n * n - 1;
  }
  /// Largest positive wavevector component, (2 pi / L)(N/2 - 1).
  double max_positive_component() const noexcept { return pi * N_ / L_ * (1.0 - 2.0 / N_); }
  /// Largest component magnitude, reached on the Nyquist planes n_i = -N/2.
  double max_abs_component() const noexcept { return pi * N_ / L_; }

  /// Minimum-image representative of dx in the box.
  Vec3 wrap(const Vec3& dx) const {
    Vec3 out{};
    for (int i = 0; i < 3; ++i) out[i] = dx[i] - L_ * std::round(dx[i] / L_);
    return out;
  }

  /// Calls f(nx, ny, nz) for every mode (zero excluded).
  template <typename F>
  void for_each_mode(F&& f) const {
    const int h = N_ / 2;
    for (int i = -h; i < h; ++i)
      for (int j = -h; j < h; ++j)
        for (int k = -h; k < h; ++k)
          if (i != 0 || j != 0 || k != 0) f(i, j, k);
  }

 private:
  double L_;
  int N_;
};

namespace detail {

// Partial sums indexed by the integer shell |n|^2, so that the final
// reduction runs in order of increasing |q| regardless of how the planes
// were split between threads.
struct ShellSums {
  std::vector<CompensatedSum> shells;
  explicit ShellSums(std::size_t n) : shells(n) {}
};

// Accumulates planes nx in [begin, end). Modes are taken in +-n pairs: an
// interior mode (no component equal to -N/2) is visited once with weight 2
// through its lexicographically positive member; a Nyquist mode has no
// mirror in the grid and enters once through its real part.
inline void accumulate_planes(const ModeGrid& g, const Vec3& dx, double eps, int begin, int end,
                              ShellSums& out) {
  const int h = g.N() / 2;
  const double dq = g.dq();
  std::vector<double> cy(g.N()), sy(g.N()), cz(g.N()), sz(g.N());
  for (int j = -h; j < h; ++j) {
    cy[j + h] = std::cos(dq * j * dx[1]);
    sy[j + h] = std::sin(dq * j * dx[1]);
    cz[j + h] = std::cos(dq * j * dx[2]);
    sz[j + h] = std::sin(dq * j * dx[2]);
  }
  for (int i = begin; i < end; ++i) {
    const double cx = std::cos(dq * i * dx[0]);
    const double sx = std::sin(dq * i * dx[0]);
    for (int j = -h; j < h; ++j) {
      // cos(a + b) and sin(a + b) for the x-y phase.
      const double cxy = cx * cy[j + h] - sx * sy[j + h];
      const double sxy = sx * cy[j + h] + cx * sy[j + h];
      for (int k = -h; k < h; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        const bool nyquist = (i == -h || j == -h || k == -h);
        double weight = 1.0;
        if (!nyquist) {
          const bool positive = i > 0 || (i == 0 && (j > 0 || (j == 0 && k > 0)));
          if (!positive) continue;
          weight = 2.0;
        }
        const long n2 = static_cast<long>(i) * i + static_cast<long>(j) * j + static_cast<long>(k) * k;
        const double q = dq * std::sqrt(static_cast<double>(n2));
        const double phase_cos = cxy * cz[k + h] - sxy * sz[k + h];
        out.shells[static_cast<std::size_t>(n2)].add(weight * q * phase_cos * std::exp(-eps * q));
      }
    }
  }
}

}  // namespace detail

/// Damped finite-volume correlator at displacement dx (kg^2/m^6). dx is first
/// wrapped to its minimum image, which must satisfy |dx| < L/2. The result is
/// independent of `threads` to rounding (compensated, shell-ordered sums).
inline double lattice_correlator(const FluidMedium& m, const ModeGrid& g, const Vec3& dx, double eps,
                                 unsigned threads = 0) {
  if (!(eps > 0.0)) throw PreconditionError("eps must be > 0");
  const Vec3 w = g.wrap(dx);
  if (!(norm(w) < 0.5 * g.L()))
    throw PreconditionError("aliasing: |dx| must be < L/2 after wrapping into the box");

  const int h = g.N() / 2;
  const std::size_t n_shells = 3 * static_cast<std::size_t>(h) * h + 1;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(g.N()));

  std::vector<detail::ShellSums> partial(threads, detail::ShellSums(n_shells));
  std::vector<std::thread> pool;
  const int per = (g.N() + static_cast<int>(threads) - 1) / static_cast<int>(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const int begin = -h + static_cast<int>(t) * per;
    const int end = std::min(h, begin + per);
    if (begin >= end) continue;
    if (threads == 1) {
      detail::accumulate_planes(g, w, eps, begin, end, partial[t]);
    } else {
      pool.emplace_back([&, begin, end, t] { detail::accumulate_planes(g, w, eps, begin, end, partial[t]); });
    }
  }
  for (auto& th : pool) th.join();

  CompensatedSum total;
  for (std::size_t s = 0; s < n_shells; ++s) {
    CompensatedSum shell;
    for (const auto& p : partial) shell.add(p.shells[s]);
    total.add(shell.value());
  }
  // Omega_q = cS q, so hbar rho0 / (2 V cS^2) * cS = hbar rho0 / (2 V cS).
  return PhysicalConstants::hbar * m.rho0() / (2.0 * g.volume() * m.cS()) * total.value();
}

/// Geometry of a finite-volume convergence study: fixed target distance r,
/// damping eps and lattice spacing a; the box grows as L = N a.
struct StudyGeometry {
  double r = 0.0;
  double eps = 0.0;
  double spacing = 0.0;

  /// eps = r * epsOverR and a = eps / 8, so the cube edge pi/a is damped by
  /// e^{-8 pi} and the remaining error is the finite-volume one.
  static StudyGeometry standard(double r, double epsOverR = 1.0) {
    const double eps = r * epsOverR;
    return {r, eps, eps / 8.0};
  }
};

struct ConvergenceRow {
  int N = 0;
  double L = 0.0;
  double lattice = 0.0;
  double continuum = 0.0;
  double rel_error = 0.0;
};

struct ConvergenceTable {
  StudyGeometry geometry;
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of log(rel_error) against log(r/L).
  double slope = 0.0;
};

/// Lattice vs continuum (spectral oracle, same eps) for each N, displacement
/// along `direction`. Throws PreconditionError when a > r/4 or r > L/8 for
/// any N, or when Ns is not increasing.
inline ConvergenceTable convergence_study(const FluidMedium& m, const StudyGeometry& geo,
                                          const std::vector<int>& Ns, Vec3 direction = {1.0, 0.0, 0.0},
                                          unsigned threads = 0) {
  if (Ns.empty()) throw PreconditionError("convergence study needs at least one N");
  if (!(geo.r > 0.0 && geo.eps > 0.0 && geo.spacing > 0.0))
    throw PreconditionError("study geometry must have r, eps, spacing > 0");
  for (std::size_t i = 1; i < Ns.size(); ++i)
    if (Ns[i] <= Ns[i - 1]) throw PreconditionError("Ns must be strictly increasing");
  for (int N : Ns) {
    const double L = N * geo.spacing;
    if (geo.spacing > geo.r / 4.0 || geo.r > L / 8.0)
      throw PreconditionError("ill-posed study: need lattice spacing <= r/4 and r <= L/8 (N = " +
                              std::to_string(N) + ")");
  }
  const double dn = norm(direction);
  if (!(dn > 0.0)) throw PreconditionError("direction must be non-zero");
  const Vec3 dx{geo.r * direction[0] / dn, geo.r * direction[1] / dn, geo.r * direction[2] / dn};

  ConvergenceTable table;
  table.geometry = geo;
  const double continuum = regulated_integrand_reduction(m, geo.r, 0.0, geo.eps, 1e-12).value;
  for (int N : Ns) {
    const ModeGrid g(N * geo.spacing, N);
    ConvergenceRow row;
    row.N = N;
    row.L = g.L();
    row.lattice = lattice_correlator(m, g, dx, geo.eps, threads);
    row.continuum = continuum;
    row.rel_error = std::abs(row.lattice - continuum) / std::abs(continuum);
    table.rows.push_back(row);
  }
  if (table.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(table.rows.size());
    for (const auto& row : table.rows) {
      const double x = std::log(geo.r / row.L);
      const double y = std::log(row.rel_error);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    table.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return table;
}

/// Convenience overload using StudyGeometry::standard(r, epsOverR).
inline ConvergenceTable convergence_study(const FluidMedium& m, double r, double epsOverR,
                                          const std::vector<int>& Ns) {
  return convergence_study(m, StudyGeometry::standard(r, epsOverR), Ns);
}

}  // namespace fluctus
