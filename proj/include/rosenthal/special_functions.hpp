// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rosenthal/bigint.hpp"
#include "rosenthal/series.hpp"

namespace rosenthal {

inline constexpr unsigned kMaxCombinatorialN = 400;
inline constexpr unsigned kMaxPolynomialM = 60;
inline constexpr unsigned kMaxBesselOrder = 3000;
inline constexpr unsigned kMaxBesselIntegralOrder = 200;
inline constexpr int kTrapezoidPanels = 1 << 12;

/// Exact polynomial with integer coefficients; coeffs[i] multiplies x^i.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

  IntPolynomial derivative() const;
  BigInt eval(const BigInt& x) const;
  /// Horner evaluation in double precision.
  double eval(double x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Rows 0..n of the Stirling numbers of the second kind, built with
/// s(n,r) = r s(n-1,r) + s(n-1,r-1).
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_n);
  const BigInt& operator()(unsigned n, unsigned r) const { return rows_[n][r]; }
  /// Sum of row n, i.e. the Bell number B(n).
  BigInt row_sum(unsigned n) const;
  unsigned max_n() const { return static_cast<unsigned>(rows_.size() - 1); }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// Stirling number of the second kind s(n, r).
BigInt stirling2(unsigned n, unsigned r);

/// Bell number B(m) via the Bell triangle.
BigInt bell_number(unsigned m);

/// Bell numbers B(0..m) via the Bell triangle.
std::vector<BigInt> bell_numbers(unsigned m);

/// log of e^-1 sum_{n>=1} n^p / n!, the p-th moment of Poisson(1).
SeriesValue bell_moment(double p, double tol = 0.0);

/// log of sum_{n>=0} |n-a|^p z^n / (e n!). Uses 0^0 = 1.
SeriesValue generalized_bell(double a, double p, double z, double tol = 0.0);

/// I_n(1) = 2^-n sum_k 4^-k / (k! (n+k)!). Returns 0 when the value
/// underflows; use log_bessel_In_one beyond that.
double bessel_In_one(unsigned n);

/// Natural log of I_n(1), accurate for every n up to kMaxBesselOrder.
double log_bessel_In_one(std::int64_t n);

/// The correction factor sum_k 4^-k n!/(k!(n+k)!), which lies in [1, e^{1/4}).
double bessel_correction(std::int64_t n);

/// Uniform trapezoid rule with kTrapezoidPanels panels for a 2 pi periodic
/// integrand over [-pi, pi].
double periodic_trapezoid(const std::function<double(double)>& f);

/// (2 pi)^-1 int_{-pi}^{pi} exp(cos t) cos(n t) dt by the periodic trapezoid rule.
double bessel_In_one_integral(unsigned n);

/// P_{2m}: P_0 = 1, P_{2m+2} = (1-x^2)(P'' + 2P' + P) - x(P' + P), so that
/// (d/dt)^{2m} exp(cos t) = exp(cos t) P_{2m}(cos t).
IntPolynomial poly_P(unsigned m);

}  // namespace rosenthal
