// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fluctus/quadrature.hpp"

using namespace fluctus;

TEST(CompensatedSum, RecoversLostBits) {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  s.add(-1.0);
  EXPECT_NEAR(s.value(), 1e-13, 1e-25);
}

TEST(CompensatedSum, MergeMatchesSequential) {
  CompensatedSum a, b, all;
  for (int i = 1; i <= 500; ++i) {
    const double x = std::pow(-1.0, i) / i;
    (i % 2 ? a : b).add(x);
    all.add(x);
  }
  a.add(b);
  EXPECT_NEAR(a.value(), all.value(), 1e-16);
}

TEST(GaussKronrod, ExactForPolynomials) {
  // The 15-point Kronrod rule integrates degree 22 exactly.
  const auto r = detail::gauss_kronrod15([](double x) { return std::pow(x, 22); }, 0.0, 1.0);
  EXPECT_NEAR(r.value, 1.0 / 23.0, 1e-15);
  EXPECT_EQ(r.evaluations, 15u);
}

TEST(Adaptive, KnownIntegrals) {
  const auto a = integrate_adaptive([](double x) { return std::exp(-x * x); }, 0.0, 5.0, 1e-13);
  EXPECT_TRUE(a.converged);
  EXPECT_NEAR(a.value, 0.5 * std::sqrt(M_PI) * std::erf(5.0), 1e-13);

  const auto b = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
  EXPECT_TRUE(b.converged);
  EXPECT_NEAR(b.value, 2.0 / 3.0, 1e-12);
  EXPECT_GT(b.evaluations, 15u);
}

TEST(Adaptive, ReportsFailureAtDepthLimit) {
  const auto r = integrate_adaptive([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, 1e-14, 3);
  EXPECT_FALSE(r.converged);
}

TEST(Panels, OscillatoryTail) {
  // Int_0^inf sin(u) e^{-u/10} du = 100 / 101.
  std::vector<double> br;
  for (int i = 0; i <= 2000; ++i) br.push_back(M_PI * i);
  const auto r = integrate_panels([](double u) { return std::sin(u) * std::exp(-0.1 * u); }, br, 1e-12);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 100.0 / 101.0, 1e-12);
}

TEST(Neville, ExactOnPolynomials) {
  const std::vector<double> x{1.0, 0.5, 0.25, 0.125};
  std::vector<double> y;
  for (double v : x) y.push_back(2.0 - 3.0 * v + 0.5 * v * v * v);
  const auto e = neville_to_zero(x, y);
  EXPECT_NEAR(e.value, 2.0, 1e-14);
  EXPECT_LT(e.estimate, 1e-2);
  EXPECT_THROW(neville_to_zero(std::vector<double>{}, std::vector<double>{}), PreconditionError);
}

TEST(Neville, EstimateTracksTruncation) {
  const std::vector<double> x{0.4, 0.2, 0.1};
  std::vector<double> y;
  for (double v : x) y.push_back(std::exp(v));
  const auto e = neville_to_zero(x, y);
  EXPECT_NEAR(e.value, 1.0, 2e-3);
  EXPECT_GT(e.estimate, std::abs(e.value - 1.0));
}
