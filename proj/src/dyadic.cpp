// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/dyadic.hpp"

#include <algorithm>
#include <cmath>

namespace rosenthal {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigRationalDyadic::BigRationalDyadic(BigInt numerator, std::uint32_t shift)
    : numerator_(std::move(numerator)), shift_(shift) {
  canonicalize();
}

void BigRationalDyadic::canonicalize() {
  if (numerator_ == 0) {
    shift_ = 0;
    return;
  }
  if (shift_ == 0) return;
  const auto tz = static_cast<std::uint32_t>(boost::multiprecision::lsb(abs(numerator_)));
  const std::uint32_t drop = std::min(tz, shift_);
  numerator_ >>= drop;
  shift_ -= drop;
}

std::optional<BigInt> BigRationalDyadic::to_integer() const {
  if (shift_ != 0) return std::nullopt;
  return numerator_;
}

double BigRationalDyadic::to_double() const {
  return std::ldexp(numerator_.convert_to<double>(), -static_cast<int>(shift_));
}

std::string BigRationalDyadic::str() const {
  if (shift_ == 0) return numerator_.str();
  return numerator_.str() + "/2^" + std::to_string(shift_);
}

BigRationalDyadic& BigRationalDyadic::operator+=(const BigRationalDyadic& rhs) {
  if (shift_ >= rhs.shift_) {
    numerator_ += rhs.numerator_ << (shift_ - rhs.shift_);
  } else {
    numerator_ = (numerator_ << (rhs.shift_ - shift_)) + rhs.numerator_;
    shift_ = rhs.shift_;
  }
  canonicalize();
  return *this;
}

BigRationalDyadic& BigRationalDyadic::operator-=(const BigRationalDyadic& rhs) {
  BigRationalDyadic neg(-rhs.numerator_, rhs.shift_);
  return *this += neg;
}

BigRationalDyadic& BigRationalDyadic::operator*=(const BigRationalDyadic& rhs) {
  numerator_ *= rhs.numerator_;
  shift_ += rhs.shift_;
  canonicalize();
  return *this;
}

}  // namespace rosenthal
