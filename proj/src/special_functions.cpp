// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/special_functions.hpp"

#include <algorithm>
#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "rosenthal/errors.hpp"
#include "rosenthal/moments.hpp"

namespace rosenthal {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_combinatorial_cap(unsigned n) {
  if (n > kMaxCombinatorialN) {
    throw CapacityError("exact combinatorics capped at n = " + std::to_string(kMaxCombinatorialN));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
  trim();
}

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() == 1) return IntPolynomial();
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Stirling and Bell numbers

StirlingTable::StirlingTable(unsigned max_n) {
  check_combinatorial_cap(max_n);
  rows_.reserve(max_n + 1);
  rows_.push_back({BigInt(1)});
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(n + 1);
    for (unsigned r = 1; r <= n; ++r) {
      if (r < n) row[r] = prev[r] * r;
      row[r] += prev[r - 1];
    }
    rows_.push_back(std::move(row));
  }
}

BigInt StirlingTable::row_sum(unsigned n) const {
  BigInt s = 0;
  for (const auto& v : rows_[n]) s += v;
  return s;
}

BigInt stirling2(unsigned n, unsigned r) {
  if (r > n) throw DomainError("stirling2: r > n");
  check_combinatorial_cap(n);
  return StirlingTable(n)(n, r);
}

std::vector<BigInt> bell_numbers(unsigned m) {
  check_combinatorial_cap(m);
  // Bell triangle: each row starts with the last entry of the previous row.
  std::vector<BigInt> out{1};
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= m; ++i) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const auto& v : row) next.push_back(next.back() + v);
    out.push_back(next.front());
    row = std::move(next);
  }
  return out;
}

BigInt bell_number(unsigned m) { return bell_numbers(m).back(); }

// ---------------------------------------------------------------------------
// Moment series

SeriesValue weighted_abs_moment(double a, double p, double z, double tol) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("weight z must be positive");
  if (!(p >= 0.0) || p > 1e6) throw DomainError("exponent p must lie in [0, 1e6]");
  if (!(std::abs(a) <= 1e6)) throw DomainError("shift a must satisfy |a| <= 1e6");
  if (tol <= 0.0) tol = default_tolerance(p);
  const double log_z = std::log(z);

  auto log_term = [&](std::int64_t n) {
    const double d = std::abs(static_cast<double>(n) - a);
    const double base = static_cast<double>(n) * log_z - std::lgamma(static_cast<double>(n) + 1.0);
    if (d == 0.0) return p == 0.0 ? base : kNegInf;
    return p * std::log(d) + base;
  };

  const std::int64_t first = a < 0.0 ? 0 : static_cast<std::int64_t>(std::floor(a)) + 1;

  // Terms at or below the shift are summed directly.
  LogSumAccumulator head;
  for (std::int64_t n = 0; n < first; ++n) head.add(log_term(n));

  // Peak of p log(x-a) + x log z - lgamma(x+1) for x > a: the derivative is
  // strictly decreasing, so bisect on its sign.
  auto slope = [&](double x) { return p / (x - a) + log_z - boost::math::digamma(x + 1.0); };
  double lo = static_cast<double>(first);
  double hi = std::max(lo + 1.0, 2.0 * (std::abs(a) + p + z) + 10.0);
  double peak = lo;
  if (slope(lo) > 0.0) {
    while (slope(hi) > 0.0) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 0.5; ++it) {
      const double mid = 0.5 * (lo + hi);
      (slope(mid) > 0.0 ? lo : hi) = mid;
    }
    peak = lo;
  }

  LogSeriesSpec spec;
  spec.log_term = log_term;
  spec.up_ratio = [&](std::int64_t n) {
    const double d = static_cast<double>(n) - a;
    return std::exp(p * std::log1p(1.0 / d) + log_z - std::log(static_cast<double>(n) + 1.0));
  };
  spec.down_ratio = [&](std::int64_t n) {
    const double d = static_cast<double>(n) - a;
    return std::exp(p * std::log1p(-1.0 / d) + std::log(static_cast<double>(n)) - log_z);
  };
  spec.first = first;
  spec.start = std::max(first, static_cast<std::int64_t>(std::llround(peak)));

  const SeriesValue tail = sum_log_series(spec, tol);
  LogSumAccumulator total;
  total.add(head.log_sum());
  total.add(tail.log_value);

  SeriesValue out;
  out.log_value = total.log_sum() - 1.0;
  out.terms_used = tail.terms_used + first;
  out.rel_tail_bound = tail.rel_tail_bound * std::exp(tail.log_value - total.log_sum());
  return out;
}

SeriesValue bell_moment(double p, double tol) {
  if (!(p > 0.0) || p > 1e6) throw DomainError("bell_moment: p must lie in (0, 1e6]");
  return weighted_abs_moment(0.0, p, 1.0, tol);
}

SeriesValue generalized_bell(double a, double p, double z, double tol) {
  if (!(z > 0.0 && z <= 1.0)) throw DomainError("generalized_bell: z must lie in (0, 1]");
  return weighted_abs_moment(a, p, z, tol);
}

// ---------------------------------------------------------------------------
// Bessel I_n(1)

double bessel_correction(std::int64_t n) {
  if (n < 0) throw DomainError("bessel order must be nonnegative");
  const double nn = static_cast<double>(n);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 30; ++k) {
    term /= 4.0 * (k + 1.0) * (nn + k + 1.0);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double log_bessel_In_one(std::int64_t n) {
  if (n < 0) throw DomainError("bessel order must be nonnegative");
  if (n <= 140) return std::log(bessel_In_one(static_cast<unsigned>(n)));
  const double nn = static_cast<double>(n);
  return -nn * std::numbers::ln2 - std::lgamma(nn + 1.0) + std::log(bessel_correction(n));
}

double bessel_In_one(unsigned n) {
  if (n > kMaxBesselOrder) throw CapacityError("bessel_In_one: order above cap");
  if (n > 140) {
    const double lv = log_bessel_In_one(n);
    return lv < -745.0 ? 0.0 : std::exp(lv);
  }
  // Leading term 2^-n / n! as a running product; no underflow for n <= 140.
  double lead = 1.0;
  for (unsigned j = 1; j <= n; ++j) lead *= 0.5 / j;
  return lead * bessel_correction(n);
}

double periodic_trapezoid(const std::function<double(double)>& f) {
  const double h = 2.0 * std::numbers::pi / kTrapezoidPanels;
  double sum = 0.0;
  for (int j = 0; j < kTrapezoidPanels; ++j) sum += f(-std::numbers::pi + j * h);
  return sum * h;
}

double bessel_In_one_integral(unsigned n) {
  if (n > kMaxBesselIntegralOrder) throw CapacityError("bessel_In_one_integral: order above cap");
  const double nn = n;
  return periodic_trapezoid([nn](double t) { return std::exp(std::cos(t)) * std::cos(nn * t); }) /
         (2.0 * std::numbers::pi);
}

// ---------------------------------------------------------------------------
// Acceleration polynomials

IntPolynomial poly_P(unsigned m) {
  if (m > kMaxPolynomialM) throw CapacityError("poly_P: m above cap");
  const IntPolynomial one_minus_x2({1, 0, -1});
  const IntPolynomial x({0, 1});
  IntPolynomial p({1});
  for (unsigned i = 0; i < m; ++i) {
    const IntPolynomial d1 = p.derivative();
    const IntPolynomial d2 = d1.derivative();
    p = one_minus_x2 * (d2 + d1 + d1 + p) - x * (d1 + p);
  }
  return p;
}

}  // namespace rosenthal
