// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/reference_tables.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

#include "rosenthal/errors.hpp"

namespace rosenthal {

namespace detail {
extern const char* const kReferenceTablesCsv;
}

double parse_table_number(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  static const std::regex pattern(R"(^([0-9]+(?:\.[0-9]*)?)(?:[eE]?([+-][0-9]+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) throw DomainError("unparseable table number: " + std::string(text));
  // rebuild a canonical literal so the conversion rounds once
  std::string canonical = m[1].str();
  if (m[2].matched) canonical += "e" + m[2].str();
  return std::stod(canonical);
}

std::vector<ReferenceEntry> parse_reference_tables(std::string_view csv) {
  std::vector<ReferenceEntry> out;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "p,K,L") throw DomainError("reference table: unexpected header " + line);
      header = true;
      continue;
    }
    std::istringstream row(line);
    std::string p, k, l;
    if (!std::getline(row, p, ',') || !std::getline(row, k, ',') || !std::getline(row, l)) {
      throw DomainError("reference table: malformed row " + line);
    }
    ReferenceEntry e;
    e.p = parse_table_number(p);
    e.K_text = k;
    e.L_text = l;
    e.K = parse_table_number(k);
    e.L = parse_table_number(l);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const ReferenceEntry& a, const ReferenceEntry& b) { return a.p < b.p; });
  return out;
}

const std::vector<ReferenceEntry>& reference_tables() {
  static const std::vector<ReferenceEntry> table = parse_reference_tables(detail::kReferenceTablesCsv);
  return table;
}

std::optional<ReferenceEntry> reference_entry(double p) {
  for (const auto& e : reference_tables()) {
    if (std::abs(e.p - p) < 1e-9) return e;
  }
  return std::nullopt;
}

}  // namespace rosenthal
