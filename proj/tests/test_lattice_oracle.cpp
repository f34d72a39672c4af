// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "fluctus/fluctus.hpp"

using namespace fluctus;

namespace {

const FluidMedium& water() {
  static const FluidMedium w = builtin_material("water");
  return w;
}

}  // namespace

TEST(ModeGrid, Geometry) {
  const ModeGrid g(64e-9, 16);
  EXPECT_EQ(g.mode_count(), 16 * 16 * 16 - 1);
  EXPECT_DOUBLE_EQ(g.spacing(), 4e-9);
  EXPECT_DOUBLE_EQ(g.max_abs_component(), M_PI * 16 / 64e-9);
  EXPECT_DOUBLE_EQ(g.max_positive_component(), g.dq() * 7);
  std::int64_t n = 0;
  g.for_each_mode([&](int, int, int) { ++n; });
  EXPECT_EQ(n, g.mode_count());
  EXPECT_THROW(ModeGrid(1.0, 7), PreconditionError);
  EXPECT_THROW(ModeGrid(1.0, 6), PreconditionError);
  EXPECT_THROW(ModeGrid(0.0, 8), PreconditionError);
}

TEST(ModeGrid, WrapToMinimumImage) {
  const ModeGrid g(10.0, 8);
  const auto w = g.wrap({9.0, -7.0, 25.0});
  EXPECT_NEAR(w[0], -1.0, 1e-15);
  EXPECT_NEAR(w[1], 3.0, 1e-15);
  EXPECT_NEAR(w[2], -5.0, 1e-15);
}

TEST(Lattice, MatchesBruteForceSum) {
  const ModeGrid g(32e-9, 8);
  const Vec3 dx{3e-9, -1e-9, 2e-9};
  const double eps = 2e-9;
  double sum = 0.0;
  g.for_each_mode([&](int i, int j, int k) {
    const Vec3 q{g.dq() * i, g.dq() * j, g.dq() * k};
    const double qn = norm(q);
    sum += qn * std::cos(q[0] * dx[0] + q[1] * dx[1] + q[2] * dx[2]) * std::exp(-eps * qn);
  });
  const double brute = PhysicalConstants::hbar * water().rho0() / (2.0 * g.volume() * water().cS()) * sum;
  EXPECT_NEAR(lattice_correlator(water(), g, dx, eps, 1), brute, 1e-12 * std::abs(brute));
}

TEST(Lattice, PeriodicInEveryAxis) {
  const ModeGrid g(40e-9, 16);
  const Vec3 dx{3e-9, 1e-9, -2e-9};
  const double base = lattice_correlator(water(), g, dx, 2e-9, 1);
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 s = dx;
    s[axis] += g.L();
    EXPECT_NEAR(lattice_correlator(water(), g, s, 2e-9, 1), base, 1e-12 * std::abs(base));
  }
}

TEST(Lattice, EvenUnderReflection) {
  const ModeGrid g(40e-9, 16);
  const Vec3 dx{3e-9, 1e-9, -2e-9}, mdx{-3e-9, -1e-9, 2e-9};
  EXPECT_EQ(lattice_correlator(water(), g, dx, 2e-9, 1), lattice_correlator(water(), g, mdx, 2e-9, 1));
}

TEST(Lattice, ThreadCountDoesNotMatter) {
  const ModeGrid g(64e-9, 64);
  const Vec3 dx{4e-9, 0.0, 0.0};
  const double one = lattice_correlator(water(), g, dx, 2e-9, 1);
  for (unsigned t : {2u, 3u, 7u, 0u})
    EXPECT_NEAR(lattice_correlator(water(), g, dx, 2e-9, t), one, 1e-13 * std::abs(one)) << t;
}

TEST(Lattice, Aliasing) {
  const ModeGrid g(10e-9, 8);
  EXPECT_THROW(lattice_correlator(water(), g, {5e-9, 0.0, 0.0}, 1e-9), PreconditionError);
  EXPECT_THROW(lattice_correlator(water(), g, {4e-9, 4e-9, 0.0}, 1e-9), PreconditionError);
  EXPECT_NO_THROW(lattice_correlator(water(), g, {11e-9, 0.0, 0.0}, 1e-9));
  EXPECT_THROW(lattice_correlator(water(), g, {1e-9, 0.0, 0.0}, 0.0), PreconditionError);
}

TEST(Lattice, LargeBoxNearsContinuum) {
  // r = 8 nm, eps = 8 nm, a = 1 nm, L = 256 nm.
  const ModeGrid g(256e-9, 256);
  const double lat = lattice_correlator(water(), g, {8e-9, 0.0, 0.0}, 8e-9);
  const double cont = damped_closed_form(water(), 8e-9, 0.0, 8e-9);
  EXPECT_LT(std::abs(lat - cont) / std::abs(cont), 1e-4);
}

TEST(ConvergenceStudy, StandardGeometry) {
  const auto t = convergence_study(water(), 8e-9, 1.0, {64, 128, 256});
  ASSERT_EQ(t.rows.size(), 3u);
  for (std::size_t i = 1; i < t.rows.size(); ++i) EXPECT_LT(t.rows[i].rel_error, t.rows[i - 1].rel_error);
  EXPECT_NEAR(t.slope, kLatticeSlopeCenter, kLatticeSlopeHalfWidth);
  // Reference errors from an independent brute-force sum.
  EXPECT_NEAR(t.rows[0].rel_error, 1.56e-2, 0.02e-2);
  EXPECT_NEAR(t.rows[1].rel_error, 1.00e-3, 0.02e-3);
  EXPECT_NEAR(t.rows[2].rel_error, 6.29e-5, 0.05e-5);
}

TEST(ConvergenceStudy, DirectionIndependentSlope) {
  const auto t = convergence_study(water(), StudyGeometry::standard(8e-9), {64, 128}, {1.0, 1.0, 1.0});
  EXPECT_LT(t.rows[1].rel_error, t.rows[0].rel_error);
}

TEST(ConvergenceStudy, IllPosed) {
  EXPECT_THROW(convergence_study(water(), 8e-9, 1.0, {8}), PreconditionError);
  EXPECT_THROW(convergence_study(water(), StudyGeometry{8e-9, 8e-9, 4e-9}, {64}), PreconditionError);
  EXPECT_THROW(convergence_study(water(), 8e-9, 1.0, {128, 64}), PreconditionError);
  EXPECT_THROW(convergence_study(water(), 8e-9, 1.0, {}), PreconditionError);
}
