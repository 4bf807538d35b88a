// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rosenthal/bigint.hpp"

namespace rosenthal {

/// Exact number numerator * 2^(-shift). Kept canonical: the numerator is odd
/// unless shift is zero.
class BigRationalDyadic {
 public:
  BigRationalDyadic() = default;
  BigRationalDyadic(BigInt numerator, std::uint32_t shift = 0);  // NOLINT(runtime/explicit)

  const BigInt& numerator() const { return numerator_; }
  std::uint32_t shift() const { return shift_; }
  bool is_integer() const { return shift_ == 0; }

  /// The value as an integer, or nullopt when it has a fractional part.
  std::optional<BigInt> to_integer() const;
  double to_double() const;
  std::string str() const;

  BigRationalDyadic& operator+=(const BigRationalDyadic& rhs);
  BigRationalDyadic& operator-=(const BigRationalDyadic& rhs);
  BigRationalDyadic& operator*=(const BigRationalDyadic& rhs);

  friend BigRationalDyadic operator+(BigRationalDyadic a, const BigRationalDyadic& b) { return a += b; }
  friend BigRationalDyadic operator-(BigRationalDyadic a, const BigRationalDyadic& b) { return a -= b; }
  friend BigRationalDyadic operator*(BigRationalDyadic a, const BigRationalDyadic& b) { return a *= b; }
  friend bool operator==(const BigRationalDyadic& a, const BigRationalDyadic& b) {
    return a.shift_ == b.shift_ && a.numerator_ == b.numerator_;
  }

 private:
  void canonicalize();

  BigInt numerator_ = 0;
  std::uint32_t shift_ = 0;
};

}  // namespace rosenthal
