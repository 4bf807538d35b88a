// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rosenthal {

using RealFunction = std::function<double(double)>;

struct ExtremumReport {
  double argmax = 0.0;
  double max_value = 0.0;
  double bracket_halfwidth = 0.0;
  std::int64_t evaluations = 0;
  double grid_step_used = 0.0;
  bool restricted_to_even = false;
  /// The best coarse point sat on an end of [lo, hi].
  bool boundary_hit = false;
  /// The five-point unimodality check failed and a fine grid was used.
  bool used_fine_grid = false;
  /// Bound on |R'| at the argmax (0 when no slope bound was supplied).
  double slope_bound = 0.0;
  /// slope_bound * grid_step_used / 2: how far a peak between two coarse
  /// points can rise above the larger of them.
  double hidden_excess = 0.0;
  /// No other coarse-grid local maximum comes within hidden_excess of
  /// max_value.
  bool grid_certified = true;
};

struct SearchOptions {
  double tol = 1e-3;
  bool even_only = false;
  /// Optional bound on |R'(p)| near p.
  RealFunction slope_bound;
  unsigned threads = 1;
};

/// Coarse grid points used by maximize_ratio: step 0.25 up to 1000, then
/// multiplicative steps of 1.05; both ends included.
std::vector<double> coarse_grid(double lo, double hi);

/// Maximizes R on [lo, hi]: coarse grid sweep then golden-section refinement,
/// or exhaustive evaluation at even integers when even_only is set.
ExtremumReport maximize_ratio(const RealFunction& r, double lo, double hi, const SearchOptions& opts);

struct InfimumReport {
  double min_on_grid = 0.0;
  double argmin = 0.0;
  bool trend_to_one = false;
};

/// Grid minimum of R, and whether R is nonincreasing toward 1 on the tail
/// of the grid (points >= 1e3, or the last three points if fewer).
InfimumReport infimum_check(const RealFunction& r, const std::vector<double>& grid);

/// One reproduced extremal constant next to its published value.
struct Theorem1Entry {
  std::string name;
  std::string argmax_name;
  double computed = 0.0;
  double published = 0.0;
  double tolerance = 0.0;
  double argmax = 0.0;
  double published_argmax = 0.0;
  double argmax_tolerance = 0.0;
  ExtremumReport report;
  std::vector<std::string> warnings;

  double deviation() const { return computed - published; }
  bool passes() const;
};

struct Theorem1Reproduction {
  std::vector<Theorem1Entry> entries;
  /// min of G/g on [4, 700] on the coarse grid.
  double min_G_over_g = 0.0;
  /// exp(log K_upper / p) / g(p) at p = 1e4 in diagnostic mode; must stay
  /// below C_9 for the truncated search interval to be sufficient.
  double S_over_g_envelope_at_1e4 = 0.0;
  bool all_pass() const;
};

Theorem1Reproduction reproduce_theorem1(unsigned threads = 1);

}  // namespace rosenthal
