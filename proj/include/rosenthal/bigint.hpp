// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace rosenthal {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Nearest double; exact for |v| < 2^53.
inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

/// Binomial coefficient C(n, k) for 0 <= k <= n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace rosenthal
