// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rosenthal/exact_constants.hpp"

namespace rosenthal::cli {

enum ExitCode : int { kOk = 0, kNumericFailure = 1, kUsageError = 2, kIoError = 3 };

enum class OutputFormat { csv, json, text };

struct RunConfig {
  std::optional<double> tolerance;  // relative, in [1e-15, 1e-3]
  OutputFormat output_format = OutputFormat::text;
  std::optional<std::string> output_path;
  std::optional<std::string> errata_path;
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
};

/// Relative deviation above which a table value is reported as an erratum.
inline constexpr double kErrataThreshold = 5e-4;

struct TableRow {
  double p = 0.0;
  ConstantValue K;
  ConstantValue L;
  double S = 0.0;
  double G = 0.0;  // L^{1/p}
  std::optional<double> paper_K;
  std::optional<double> paper_L;
  std::optional<double> dev_K;  // (computed - published) / published
  std::optional<double> dev_L;
};

/// K and L at p >= 2 by the most exact available route: combinatorial at
/// even integers up to 40, closed form for K on (2, 4) and for L at odd
/// integers from 5, series otherwise.
TableRow compute_row(double p, double tol = 0.0);

/// p_min, p_min + step, ... up to p_max (inclusive, with 1e-9 slack).
std::vector<double> table_grid(double p_min, double p_max, double step);

std::string csv_header();
std::string csv_line(const TableRow& row);
/// One line per |deviation| > kErrataThreshold.
std::vector<std::string> errata_lines(const TableRow& row);

/// Shortest round-trip decimal form.
std::string format_double(double x);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rosenthal::cli
