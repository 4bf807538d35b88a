// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rosenthal {

/// One printed row of the K(p), L(p) tables. The text fields keep the
/// printed strings, including malformed exponents.
struct ReferenceEntry {
  double p = 0.0;
  std::string K_text;
  std::string L_text;
  double K = 0.0;
  double L = 0.0;
};

/// Parses a printed table number. Accepts "1.44191E+006", spaced exponents
/// ("1.21607 E + 009") and a missing E ("6.08476 + 011").
double parse_table_number(std::string_view text);

/// Rows of the embedded table file, sorted by p.
const std::vector<ReferenceEntry>& reference_tables();
std::vector<ReferenceEntry> parse_reference_tables(std::string_view csv);

std::optional<ReferenceEntry> reference_entry(double p);

/// Version tag of the embedded table file.
inline constexpr const char* kReferenceTablesVersion = "reference_tables_v1";

}  // namespace rosenthal
