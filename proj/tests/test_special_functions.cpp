// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/special_functions.hpp"

#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <functional>

#include "rosenthal/errors.hpp"
#include "rosenthal/exact_constants.hpp"

namespace rosenthal {
namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

// Number of partitions of {1..n} into r blocks by restricted growth strings.
long enumerate_partitions(int n, int r) {
  std::vector<int> a(n, 0);
  long count = 0;
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == n) {
      if (maxv + 1 == r) ++count;
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      a[i] = v;
      rec(i + 1, std::max(maxv, v));
    }
  };
  if (n == 0) return r == 0 ? 1 : 0;
  a[0] = 0;
  rec(1, 0);
  return count;
}

// s(n, r) = (1/r!) sum_j (-1)^j C(r, j) (r - j)^n.
BigInt stirling_explicit(unsigned n, unsigned r) {
  BigInt sum = 0;
  for (unsigned j = 0; j <= r; ++j) {
    BigInt term = binomial(r, j) * boost::multiprecision::pow(BigInt(r - j), n);
    sum += (j % 2 ? -term : term);
  }
  BigInt fact = 1;
  for (unsigned k = 2; k <= r; ++k) fact *= k;
  return sum / fact;
}

// 2^-n sum_k 4^-k / (k! (n+k)!) in 50 digits.
Float50 bessel_oracle(unsigned n) {
  Float50 term = 1;
  for (unsigned j = 1; j <= n; ++j) term /= j;
  term /= boost::multiprecision::pow(Float50(2), n);
  Float50 sum = 0;
  for (unsigned k = 0; k < 80; ++k) {
    sum += term;
    term /= 4 * (k + 1) * Float50(n + k + 1);
  }
  return sum;
}

// e^-1 sum_n |n - a|^p z^n / n! in 50 digits.
Float50 moment_oracle(double a, double p, double z) {
  Float50 sum = 0;
  Float50 w = 1;  // z^n / n!
  for (int n = 0; n < 400; ++n) {
    const Float50 d = abs(Float50(n) - Float50(a));
    if (d != 0 || p == 0) sum += (p == 0 ? Float50(1) : pow(d, Float50(p))) * w;
    w *= Float50(z) / (n + 1);
  }
  return sum / exp(Float50(1));
}

TEST(Stirling2, Examples) {
  EXPECT_EQ(stirling2(4, 4), 1);
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(5, 0), 0);
}

TEST(Stirling2, MatchesPartitionEnumeration) {
  for (int n = 0; n <= 9; ++n) {
    for (int r = 0; r <= n; ++r) EXPECT_EQ(stirling2(n, r), enumerate_partitions(n, r)) << n << "," << r;
  }
}

TEST(Stirling2, MatchesExplicitFormula) {
  for (unsigned n : {10u, 25u, 60u, 120u}) {
    for (unsigned r : {1u, 2u, n / 3, n / 2, n - 1, n}) EXPECT_EQ(stirling2(n, r), stirling_explicit(n, r)) << n;
  }
}

TEST(Stirling2, Errors) {
  EXPECT_THROW(stirling2(3, 4), DomainError);
  EXPECT_THROW(stirling2(401, 2), CapacityError);
}

TEST(BellNumber, Examples) {
  EXPECT_EQ(bell_number(0), 1);
  EXPECT_EQ(bell_number(4), 15);
  EXPECT_EQ(bell_number(5), 52);
  EXPECT_EQ(bell_number(10), 115975);
  EXPECT_THROW(bell_number(401), CapacityError);
}

TEST(BellNumber, EqualsStirlingRowSums) {
  const auto bells = bell_numbers(60);
  for (unsigned n = 0; n <= 60; ++n) {
    BigInt sum = 0;
    for (unsigned r = 0; r <= n; ++r) sum += stirling2(n, r);
    EXPECT_EQ(sum, bells[n]) << n;
    EXPECT_EQ(bell_number(n), bells[n]);
  }
}

TEST(BellMoment, Examples) {
  EXPECT_NEAR(bell_moment(1.0).log_value, 0.0, 1e-13);
  EXPECT_NEAR(bell_moment(4.0).log_value, std::log(15.0), 1e-12 * std::log(15.0));
  const auto v = bell_moment(2.5);
  EXPECT_LE(v.rel_tail_bound, 1e-12);
  EXPECT_GT(v.log_value, std::log(2.0));
  EXPECT_LT(v.log_value, std::log(5.0));
  EXPECT_NEAR(v.value(), static_cast<double>(moment_oracle(0.0, 2.5, 1.0)), 1e-13 * v.value());
}

TEST(BellMoment, DobinskiConsistency) {
  for (unsigned m = 1; m <= 25; ++m) {
    const double exact = to_double(bell_number(m));
    EXPECT_NEAR(bell_moment(m).value(), exact, 1e-10 * exact) << m;
  }
}

TEST(BellMoment, LargeExponentStaysFinite) {
  const auto v = bell_moment(1e5);
  EXPECT_TRUE(std::isfinite(v.log_value));
  EXPECT_LE(v.rel_tail_bound, 1e-10);
  EXPECT_THROW(bell_moment(0.0), DomainError);
  EXPECT_THROW(bell_moment(2e6), DomainError);
}

TEST(GeneralizedBell, Examples) {
  EXPECT_NEAR(generalized_bell(0.0, 3.0, 1.0).log_value, std::log(5.0), 1e-13);
  EXPECT_NEAR(generalized_bell(1.0, 4.0, 1.0).log_value, std::log(4.0), 1e-13);
  EXPECT_NEAR(generalized_bell(1.0, 0.0, 1.0).log_value, 0.0, 1e-14);
}

TEST(GeneralizedBell, MatchesHighPrecisionSum) {
  struct Case {
    double a, p, z;
  };
  for (const auto c : {Case{1.0, 4.5, 1.0}, Case{0.5, 3.3, 0.7}, Case{2.25, 7.0, 0.2}, Case{1.0, 17.5, 1.0}}) {
    const double want = static_cast<double>(moment_oracle(c.a, c.p, c.z));
    EXPECT_NEAR(generalized_bell(c.a, c.p, c.z).value(), want, 2e-13 * want) << c.a << " " << c.p << " " << c.z;
  }
}

TEST(GeneralizedBell, NondecreasingInP) {
  double prev = -1.0;
  for (double p = 2.0; p <= 50.0; p += 0.5) {
    const double v = generalized_bell(1.0, p, 1.0).log_value;
    EXPECT_GE(v, prev) << p;
    prev = v;
  }
}

TEST(GeneralizedBell, Errors) {
  EXPECT_THROW(generalized_bell(1.0, 2.0, 1.5), DomainError);
  EXPECT_THROW(generalized_bell(1.0, 2.0, 0.0), DomainError);
}

TEST(BesselInOne, Examples) {
  EXPECT_NEAR(bessel_In_one(0), 1.266065878, 1e-9);
  EXPECT_NEAR(bessel_In_one(1), 0.565159104, 1e-9);
  const double want = static_cast<double>(bessel_oracle(30));
  EXPECT_NEAR(bessel_In_one(30), want, 1e-12 * want);
}

TEST(BesselInOne, MatchesBoost) {
  for (unsigned n = 0; n <= 100; ++n) {
    const double want = boost::math::cyl_bessel_i(static_cast<double>(n), 1.0);
    EXPECT_NEAR(bessel_In_one(n), want, 4e-15 * want) << n;
  }
}

TEST(BesselInOne, LogScaleForLargeOrders) {
  for (unsigned n : {150u, 500u, 3000u}) {
    const double want = static_cast<double>(log(bessel_oracle(n)));
    EXPECT_NEAR(log_bessel_In_one(n), want, 1e-13 * std::abs(want)) << n;
  }
  EXPECT_THROW(bessel_In_one(3001), CapacityError);
}

TEST(BesselInOne, PositiveAndDecreasing) {
  for (unsigned n = 0; n < 100; ++n) {
    EXPECT_GT(bessel_In_one(n + 1), 0.0);
    EXPECT_LT(bessel_In_one(n + 1), bessel_In_one(n));
  }
}

TEST(BesselInOne, GeneratingIdentity) {
  double sum = bessel_In_one(0);
  for (unsigned n = 1; n <= 100; ++n) sum += 2.0 * bessel_In_one(n);
  EXPECT_NEAR(sum, std::exp(1.0), 1e-10);
}

TEST(BesselCorrection, BetweenOneAndQuarterRoot) {
  for (std::int64_t n : {0, 1, 10, 1000, 100000}) {
    EXPECT_GE(bessel_correction(n), 1.0);
    EXPECT_LE(bessel_correction(n), std::exp(0.25));
  }
}

TEST(BesselIntegral, CrossRoute) {
  for (unsigned n = 0; n <= 30; ++n) EXPECT_NEAR(bessel_In_one_integral(n), bessel_In_one(n), 1e-12) << n;
  EXPECT_LE(std::abs(bessel_In_one_integral(200)), bessel_In_one(200) + 1e-12);
  EXPECT_THROW(bessel_In_one_integral(201), CapacityError);
}

TEST(PeriodicTrapezoid, IntegratesTrigPolynomials) {
  EXPECT_NEAR(periodic_trapezoid([](double t) { return std::cos(t) * std::cos(t); }), M_PI, 1e-13);
  EXPECT_NEAR(periodic_trapezoid([](double) { return 1.0; }), 2.0 * M_PI, 1e-13);
}

TEST(PolyP, Examples) {
  EXPECT_EQ(poly_P(0), IntPolynomial({BigInt(1)}));
  const auto p2 = poly_P(1);
  EXPECT_EQ(p2, IntPolynomial({BigInt(1), BigInt(-1), BigInt(-1)}));
  EXPECT_EQ(p2.eval(BigInt(1)), -1);
  EXPECT_EQ(poly_P(3).eval(BigInt(1)), -31);
  EXPECT_THROW(poly_P(61), CapacityError);
}

TEST(PolyP, DegreeAndRecursion) {
  const IntPolynomial one({BigInt(1)});
  const IntPolynomial x({BigInt(0), BigInt(1)});
  const IntPolynomial one_minus_x2({BigInt(1), BigInt(0), BigInt(-1)});
  for (unsigned m = 0; m < 12; ++m) {
    const auto p = poly_P(m);
    EXPECT_EQ(p.degree(), 2 * m);
    const auto d1 = p.derivative();
    const auto d2 = d1.derivative();
    const auto next = one_minus_x2 * (d2 + d1 + d1 + p) - x * (d1 + p);
    EXPECT_EQ(poly_P(m + 1), next) << m;
  }
}

TEST(PolyP, SignedValueAtOneIsK) {
  for (unsigned m = 1; m <= 20; ++m) {
    BigInt v = poly_P(m).eval(BigInt(1));
    if (m % 2) v = -v;
    EXPECT_EQ(v, K_even_exact(m)) << m;
  }
}

TEST(IntPolynomial, Arithmetic) {
  const IntPolynomial a({BigInt(1), BigInt(2)});
  const IntPolynomial b({BigInt(-1), BigInt(0), BigInt(3)});
  EXPECT_EQ(a * b, IntPolynomial({BigInt(-1), BigInt(-2), BigInt(3), BigInt(6)}));
  EXPECT_EQ((a - a).degree(), 0u);
  EXPECT_EQ((a - a)[0], 0);
  EXPECT_DOUBLE_EQ(b.eval(2.0), 11.0);
  EXPECT_EQ(b.eval(BigInt(-2)), 11);
}

TEST(StirlingTable, RowSums) {
  StirlingTable t(30);
  EXPECT_EQ(t.max_n(), 30u);
  for (unsigned n = 0; n <= 30; ++n) EXPECT_EQ(t.row_sum(n), bell_number(n));
  EXPECT_EQ(t(10, 3), stirling2(10, 3));
}

}  // namespace
}  // namespace rosenthal
