// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/exact_constants.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rosenthal/errors.hpp"
#include "rosenthal/special_functions.hpp"

namespace rosenthal {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kQuarterRootE = std::exp(0.25);

// Largest x >= lo with slope(x) > 0 to within 1/2, for a decreasing slope.
double find_peak(const std::function<double(double)>& slope, double lo) {
  if (!(slope(lo) > 0.0)) return lo;
  double hi = 2.0 * lo + 16.0;
  while (slope(hi) > 0.0) hi *= 2.0;
  while (hi - lo > 0.5) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  return lo;
}

void check_exponent(double p, double lo, const char* what) {
  if (!(p >= lo) || p > 1e6) {
    throw DomainError(std::string(what) + ": exponent outside [" + std::to_string(lo) + ", 1e6]");
  }
}

// Specification of sum_{n>=1} n^p log^m(n) I_n(1); m = 0 gives the K series.
LogSeriesSpec k_type_series(double p, unsigned m) {
  LogSeriesSpec spec;
  const double mm = m;
  spec.first = m == 0 ? 1 : 2;
  spec.log_term = [p, mm](std::int64_t n) {
    const double x = static_cast<double>(n);
    double lt = p * std::log(x) + log_bessel_In_one(n);
    if (mm > 0.0) lt += mm * std::log(std::log(x));
    return lt;
  };
  // I_{n+1}(1)/I_n(1) <= 1/(2(n+1)); I_{n-1}(1)/I_n(1) <= 2n e^{1/4}.
  spec.up_ratio = [p, mm](std::int64_t n) {
    const double x = static_cast<double>(n);
    double lr = p * std::log1p(1.0 / x) - std::log(2.0 * (x + 1.0));
    if (mm > 0.0) lr += mm * std::log(std::log(x + 1.0) / std::log(x));
    return std::exp(lr);
  };
  spec.down_ratio = [p, mm](std::int64_t n) {
    const double x = static_cast<double>(n);
    double lr = p * std::log1p(-1.0 / x) + std::log(2.0 * x * kQuarterRootE);
    if (mm > 0.0) lr += mm * std::log(std::log(x - 1.0) / std::log(x));
    return std::exp(lr);
  };
  const double peak = find_peak(
      [p](double x) { return p / x - std::numbers::ln2 - boost::math::digamma(x + 1.0); }, 1.0);
  spec.start = std::max<std::int64_t>(spec.first, std::llround(peak));
  return spec;
}

}  // namespace

std::string_view to_string(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::K: return "K";
    case ConstantKind::L: return "L";
    case ConstantKind::S: return "S";
    case ConstantKind::G: return "G";
  }
  return "?";
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::series: return "series";
    case Route::combinatorial: return "combinatorial";
    case Route::accelerated: return "accelerated";
    case Route::closed_form: return "closed_form";
  }
  return "?";
}

SeriesValue L_series(double p, double tol) {
  check_exponent(p, 2.0, "L_series");
  return generalized_bell(1.0, p, 1.0, tol);
}

double G_value(double p) {
  if (!(p >= 4.0)) throw DomainError("G_value: p must be >= 4");
  return std::exp(L_series(p).log_value / p);
}

SeriesValue K_series(double p, double tol) {
  check_exponent(p, 2.0, "K_series");
  if (tol <= 0.0) tol = default_tolerance(p);
  SeriesValue s = sum_log_series(k_type_series(p, 0), tol);
  s.log_value += std::numbers::ln2 - 1.0;
  return s;
}

double S_closed_form(double p) {
  if (!(p >= 2.0 && p <= 4.0)) throw DomainError("S_closed_form: p must lie in [2, 4]");
  const double k = 1.0 + std::sqrt(std::exp2(p) / std::numbers::pi) * std::tgamma(0.5 * (p + 1.0));
  return std::pow(k, 1.0 / p);
}

double S_value(double p) {
  if (!(p >= 2.0)) throw DomainError("S_value: p must be >= 2");
  if (p == 2.0) return 1.0;
  if (p <= 4.0) return S_closed_form(p);
  return std::exp(K_series(p).log_value / p);
}

BigRationalDyadic K_even_dyadic(unsigned m) {
  if (m < 1 || m > 100) throw DomainError("K_even_exact: m must lie in [1, 100]");
  const unsigned n = 2 * m;
  const StirlingTable s(n);
  // A(j) = sum_q 2^-q s(j, q); the (q, r) double sum factors as A(n-l) A(l).
  std::vector<BigRationalDyadic> a(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    BigRationalDyadic acc;
    for (unsigned q = 0; q <= j; ++q) acc += BigRationalDyadic(s(j, q), q);
    a[j] = acc;
  }
  BigRationalDyadic total;
  for (unsigned l = 0; l <= n; ++l) {
    BigRationalDyadic term = BigRationalDyadic(binomial(n, l)) * a[n - l] * a[l];
    if (l % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt K_even_exact(unsigned m) {
  const BigRationalDyadic v = K_even_dyadic(m);
  auto as_int = v.to_integer();
  if (!as_int) throw InconsistencyError("K_even_exact: dyadic sum is not an integer: " + v.str());
  return *as_int;
}

BigInt L_even_exact(unsigned m) {
  if (m < 1 || m > 100) throw DomainError("L_even_exact: m must lie in [1, 100]");
  const unsigned n = 2 * m;
  const StirlingTable s(n);
  BigInt total = 0;
  for (unsigned l = 0; l <= n; ++l) {
    const BigInt term = binomial(n, l) * s.row_sum(n - l);
    if (l % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

OddL L_odd_exact(unsigned p) {
  if (p % 2 == 0) throw DomainError("L_odd_exact: p must be odd");
  if (p < 5 || p > 199) throw DomainError("L_odd_exact: p must lie in [5, 199]");
  const auto bell = bell_numbers(p);
  BigInt total = 0;
  for (unsigned k = 0; k <= p; ++k) {
    const BigInt term = binomial(p, k) * bell[p - k];
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return {total, to_double(total) + 2.0 / std::numbers::e};
}

BigInt K_via_polynomial(unsigned m) {
  const BigInt v = poly_P(m).eval(BigInt(1));
  return m % 2 == 0 ? v : BigInt(-v);
}

SeriesValue K_accelerated(double p, unsigned m, double tol) {
  if (m == 0) return K_series(p, tol);
  if (m > 10) throw DomainError("K_accelerated: m must be <= 10");
  if (!(p >= 4.0) || !(2.0 * m < p)) throw DomainError("K_accelerated: requires p >= 4 and 2m < p");
  if (tol <= 0.0) tol = default_tolerance(p);

  const IntPolynomial poly = poly_P(m);
  const double h = 2.0 * std::numbers::pi / kTrapezoidPanels;
  std::vector<double> nodes(kTrapezoidPanels);
  std::vector<double> weights(kTrapezoidPanels);
  for (int j = 0; j < kTrapezoidPanels; ++j) {
    nodes[j] = -std::numbers::pi + j * h;
    const double c = std::cos(nodes[j]);
    weights[j] = std::exp(c) * poly.eval(c) * h;
  }
  // Integration by parts 2m times contributes (-1)^m.
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  const double reduced = p - 2.0 * m;

  double sum = 0.0;
  double rel_tail = 0.0;
  std::int64_t n = 1;
  for (;; ++n) {
    if (n > 100000) throw BudgetError("K_accelerated: no convergence");
    const double x = static_cast<double>(n);
    double integral = 0.0;
    for (int j = 0; j < kTrapezoidPanels; ++j) integral += weights[j] * std::cos(x * nodes[j]);
    sum += sign * std::pow(x, reduced) * integral;
    // Tail after n: n^p I_n(1) <= n^p e^{1/4} 2^-n / n!, geometric with the
    // ratio bound below once it drops under one.
    const double r = std::exp(p * std::log1p(1.0 / x) - std::log(2.0 * (x + 1.0)));
    if (r < 1.0 && sum > 0.0) {
      const double log_bound_term = p * std::log(x) + 0.25 - x * std::numbers::ln2 - std::lgamma(x + 1.0);
      const double tail = 2.0 * std::numbers::pi * std::exp(log_bound_term) * r / (1.0 - r);
      rel_tail = tail / sum;
      if (rel_tail <= tol) break;
    }
  }
  if (!(sum > 0.0)) throw InconsistencyError("K_accelerated: nonpositive sum");
  SeriesValue out;
  out.log_value = std::log(sum) - std::log(std::numbers::pi * std::numbers::e);
  out.rel_tail_bound = rel_tail;
  out.terms_used = n;
  return out;
}

DerivativeValue L_derivative(double p, unsigned m) {
  if (!(p >= 4.0) || p > 1e6) throw DomainError("L_derivative: p must lie in [4, 1e6]");
  if (m < 1 || m > 4) throw DomainError("L_derivative: order must lie in [1, 4]");
  const double mm = m;
  LogSeriesSpec spec;
  spec.first = 3;
  spec.log_term = [p, mm](std::int64_t n) {
    const double x = static_cast<double>(n);
    return p * std::log(x - 1.0) + mm * std::log(std::log(x - 1.0)) - std::lgamma(x + 1.0);
  };
  spec.up_ratio = [p, mm](std::int64_t n) {
    const double x = static_cast<double>(n);
    return std::exp(p * std::log(x / (x - 1.0)) + mm * std::log(std::log(x) / std::log(x - 1.0)) -
                    std::log(x + 1.0));
  };
  spec.down_ratio = [p, mm](std::int64_t n) {
    const double x = static_cast<double>(n);
    return std::exp(p * std::log((x - 2.0) / (x - 1.0)) +
                    mm * std::log(std::log(x - 2.0) / std::log(x - 1.0)) + std::log(x));
  };
  const double peak = find_peak(
      [p](double x) { return p / (x - 1.0) - boost::math::digamma(x + 1.0); }, 3.0);
  spec.start = std::max<std::int64_t>(3, std::llround(peak));
  const SeriesValue s = sum_log_series(spec, default_tolerance(p));

  DerivativeValue out;
  out.value = std::exp(s.log_value - 1.0);
  const double bell = std::exp(bell_moment(p).log_value);
  out.bound = std::exp(-1.0) * std::pow(mm / std::numbers::e, mm) * (std::numbers::e * bell - 1.0);
  if (!(out.value <= out.bound)) {
    throw InconsistencyError("L_derivative: value exceeds the term-wise bound");
  }
  return out;
}

DerivativeValue K_derivative(double p, unsigned m) {
  if (!(p >= 4.0) || p > 1e6) throw DomainError("K_derivative: p must lie in [4, 1e6]");
  if (m < 1 || m > 4) throw DomainError("K_derivative: order must lie in [1, 4]");
  const SeriesValue s = sum_log_series(k_type_series(p, m), default_tolerance(p));
  DerivativeValue out;
  out.value = std::exp(s.log_value + std::numbers::ln2 - 1.0);
  out.bound = std::pow(m / std::numbers::e, m) * std::exp(K_series(p + 1.0).log_value);
  if (!(out.value <= out.bound)) {
    throw InconsistencyError("K_derivative: value exceeds the term-wise bound");
  }
  return out;
}

double K_closed_form_derivative(double p) {
  if (!(p > 2.0 && p <= 4.0)) throw DomainError("K_closed_form_derivative: p must lie in (2, 4]");
  const double excess = std::sqrt(std::exp2(p) / std::numbers::pi) * std::tgamma(0.5 * (p + 1.0));
  return excess * 0.5 * (std::numbers::ln2 + boost::math::digamma(0.5 * (p + 1.0)));
}

}  // namespace rosenthal
