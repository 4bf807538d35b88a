// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/extrema.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "rosenthal/asymptotics.hpp"
#include "rosenthal/errors.hpp"
#include "rosenthal/exact_constants.hpp"

namespace rosenthal {
namespace {

double G_over_g(double p) { return std::exp(L_series(p).log_value / p) / g_factor(p); }

void expect_certified(const RealFunction& r, const ExtremumReport& rep, double lo, double hi) {
  const double a = rep.argmax - rep.bracket_halfwidth;
  const double b = rep.argmax + rep.bracket_halfwidth;
  if (a >= lo) EXPECT_LE(r(a), rep.max_value);
  if (b <= hi) EXPECT_LE(r(b), rep.max_value);
}

TEST(CoarseGrid, LinearThenGeometric) {
  const auto xs = coarse_grid(4.0, 1200.0);
  EXPECT_EQ(xs.front(), 4.0);
  EXPECT_EQ(xs.back(), 1200.0);
  EXPECT_DOUBLE_EQ(xs[1] - xs[0], 0.25);
  std::size_t i = 0;
  while (xs[i] < 1000.0) ++i;
  EXPECT_EQ(xs[i], 1000.0);
  EXPECT_NEAR(xs[i + 1] / xs[i], 1.05, 1e-12);
  for (std::size_t k = 1; k < xs.size(); ++k) EXPECT_LT(xs[k - 1], xs[k]);
}

TEST(MaximizeRatio, ConstantFunction) {
  const RealFunction one = [](double) { return 1.0; };
  const auto rep = maximize_ratio(one, 4.0, 10.0, {});
  EXPECT_EQ(rep.max_value, 1.0);
  EXPECT_GE(rep.argmax, 4.0);
  EXPECT_LE(rep.argmax, 10.0);
}

TEST(MaximizeRatio, SmoothPeak) {
  const RealFunction r = [](double p) { return 2.0 - (p - 7.3) * (p - 7.3); };
  SearchOptions o;
  o.tol = 1e-5;
  const auto rep = maximize_ratio(r, 4.0, 10.0, o);
  EXPECT_NEAR(rep.argmax, 7.3, 1e-5);
  EXPECT_NEAR(rep.max_value, 2.0, 1e-9);
  EXPECT_LE(rep.bracket_halfwidth, 1e-5);
  EXPECT_FALSE(rep.boundary_hit);
  EXPECT_DOUBLE_EQ(rep.grid_step_used, 0.25);
  EXPECT_GT(rep.evaluations, 20);
  expect_certified(r, rep, 4.0, 10.0);
}

TEST(MaximizeRatio, BoundaryMaximumIsFlagged) {
  const RealFunction r = [](double p) { return p; };
  const auto rep = maximize_ratio(r, 4.0, 10.0, {});
  EXPECT_TRUE(rep.boundary_hit);
  EXPECT_NEAR(rep.argmax, 10.0, 1e-3);
}

TEST(MaximizeRatio, EvenOnly) {
  const RealFunction r = [](double p) { return -(p - 34.6) * (p - 34.6); };
  SearchOptions o;
  o.even_only = true;
  const auto rep = maximize_ratio(r, 4.0, 700.0, o);
  EXPECT_EQ(rep.argmax, 34.0);
  EXPECT_TRUE(rep.restricted_to_even);
  EXPECT_EQ(rep.evaluations, 349);
  EXPECT_THROW(maximize_ratio(r, 5.0, 5.5, o), DomainError);
}

TEST(MaximizeRatio, Preconditions) {
  const RealFunction one = [](double) { return 1.0; };
  EXPECT_THROW(maximize_ratio(one, 5.0, 5.0, {}), DomainError);
  SearchOptions o;
  o.tol = 0.0;
  EXPECT_THROW(maximize_ratio(one, 4.0, 5.0, o), DomainError);
}

TEST(MaximizeRatio, SecondPeakAndHiddenExcess) {
  const RealFunction r = [](double p) {
    return std::exp(-(p - 10.0) * (p - 10.0)) + 0.9 * std::exp(-(p - 30.0) * (p - 30.0));
  };
  SearchOptions o;
  o.slope_bound = [](double) { return 1.0; };
  auto rep = maximize_ratio(r, 4.0, 40.0, o);
  EXPECT_NEAR(rep.argmax, 10.0, 1e-3);
  EXPECT_NEAR(rep.hidden_excess, 0.125, 1e-12);
  EXPECT_FALSE(rep.grid_certified);
  o.slope_bound = [](double) { return 0.1; };
  rep = maximize_ratio(r, 4.0, 40.0, o);
  EXPECT_TRUE(rep.grid_certified);
}

TEST(MaximizeRatio, RoughFunctionNeverBelowGrid) {
  const RealFunction r = [](double p) { return -std::abs(p - 7.0) + 0.01 * std::sin(200.0 * p); };
  const auto rep = maximize_ratio(r, 4.0, 10.0, {});
  for (double x : coarse_grid(4.0, 10.0)) EXPECT_GE(rep.max_value, r(x));
  expect_certified(r, rep, 4.0, 10.0);
}

TEST(MaximizeRatio, ThreadCountDoesNotChangeReport) {
  SearchOptions a;
  a.tol = 1e-4;
  SearchOptions b = a;
  b.threads = 3;
  const auto ra = maximize_ratio(G_over_g, 4.0, 100.0, a);
  const auto rb = maximize_ratio(G_over_g, 4.0, 100.0, b);
  EXPECT_EQ(ra.argmax, rb.argmax);
  EXPECT_EQ(ra.max_value, rb.max_value);
  EXPECT_EQ(ra.bracket_halfwidth, rb.bracket_halfwidth);
  EXPECT_EQ(ra.evaluations, rb.evaluations);
}

TEST(MaximizeRatio, GOverGPeak) {
  SearchOptions o;
  o.tol = 1e-4;
  const auto rep = maximize_ratio(G_over_g, 4.0, 700.0, o);
  EXPECT_NEAR(rep.argmax, 33.4610, 0.05);
  EXPECT_NEAR(rep.max_value, 1.77638, 5e-6);
  expect_certified(G_over_g, rep, 4.0, 700.0);
  o.even_only = true;
  const auto even = maximize_ratio(G_over_g, 4.0, 700.0, o);
  EXPECT_EQ(even.argmax, 34.0);
  EXPECT_NEAR(even.max_value, 1.77637, 5e-6);
}

TEST(InfimumCheck, Examples) {
  const auto inf = infimum_check(G_over_g, coarse_grid(4.0, 700.0));
  EXPECT_NEAR(inf.min_on_grid, 1.332, 1e-3);
  EXPECT_TRUE(infimum_check(G_over_g, {1e3, 1e4, 1e5}).trend_to_one);
  const auto one = infimum_check([](double) { return 1.0; }, {4.0, 10.0, 1e4});
  EXPECT_EQ(one.min_on_grid, 1.0);
  EXPECT_TRUE(one.trend_to_one);
  EXPECT_FALSE(infimum_check([](double p) { return 1.0 + std::log(p); }, {1e3, 1e4, 1e5}).trend_to_one);
  EXPECT_THROW(infimum_check(G_over_g, {}), DomainError);
}

TEST(ReproduceTheorem1, AllEntries) {
  const auto rep = reproduce_theorem1(1);
  ASSERT_EQ(rep.entries.size(), 6u);
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.passes()) << e.name << " " << e.computed << " at " << e.argmax;
    EXPECT_FALSE(e.report.boundary_hit) << e.name;
    EXPECT_TRUE(e.warnings.empty()) << e.name;
  }
  EXPECT_TRUE(rep.all_pass());
  EXPECT_NEAR(rep.min_G_over_g, 1.332, 1e-3);
  EXPECT_LT(rep.S_over_g_envelope_at_1e4, 1.53572);
  EXPECT_NEAR(rep.entries[0].computed, 1.77638, 5e-6);
  EXPECT_EQ(rep.entries[5].argmax, 72.0);
}

}  // namespace
}  // namespace rosenthal
