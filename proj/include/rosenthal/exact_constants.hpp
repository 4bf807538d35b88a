// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>

#include "rosenthal/bigint.hpp"
#include "rosenthal/dyadic.hpp"
#include "rosenthal/series.hpp"

namespace rosenthal {

// K(p) = E|t1 - t2|^p with t1, t2 independent Poisson(1/2); L(p) = E|t - 1|^p
// with t ~ Poisson(1). S = K^{1/p}, G = L^{1/p}.

enum class ConstantKind { K, L, S, G };
enum class Route { series, combinatorial, accelerated, closed_form };

std::string_view to_string(ConstantKind kind);
std::string_view to_string(Route route);

/// One evaluated constant. `exact` is set for the combinatorial route; for
/// kinds S and G the value is the p-th root of the underlying K or L.
struct ConstantValue {
  double p = 0.0;
  ConstantKind kind = ConstantKind::K;
  Route route = Route::series;
  double value = 0.0;
  double rel_error = 0.0;
  std::optional<BigInt> exact;
};

/// log of e^-1 sum_{n>=0} |n-1|^p / n!.
SeriesValue L_series(double p, double tol = 0.0);

/// L(p)^{1/p} for p >= 4.
double G_value(double p);

/// log of (2/e) sum_{n>=1} n^p I_n(1).
SeriesValue K_series(double p, double tol = 0.0);

/// (1 + sqrt(2^p/pi) Gamma((p+1)/2))^{1/p}, the symmetric constant on (2, 4].
double S_closed_form(double p);

/// S(p): 1 at p = 2, closed form on (2, 4], K_series(p)^{1/p} above 4.
double S_value(double p);

/// Double Stirling sum for K(2m) in exact dyadic arithmetic.
BigRationalDyadic K_even_dyadic(unsigned m);

/// K(2m) as an exact integer. Throws InconsistencyError if the dyadic sum is
/// not an integer.
BigInt K_even_exact(unsigned m);

/// L(2m) = sum_l (-1)^l C(2m,l) sum_r s(2m-l, r).
BigInt L_even_exact(unsigned m);

/// L(p) = 2/e + N_p for odd p >= 5, N_p = sum_k (-1)^k C(p,k) B(p-k).
struct OddL {
  BigInt integer_part;
  double value = 0.0;
};
OddL L_odd_exact(unsigned p);

/// (-1)^m P_{2m}(1).
BigInt K_via_polynomial(unsigned m);

/// K(p) through the integrated-by-parts Bessel integrals with P_{2m}.
SeriesValue K_accelerated(double p, unsigned m, double tol = 0.0);

struct DerivativeValue {
  double value = 0.0;
  double bound = 0.0;
};

/// m-th p-derivative of L by term-wise differentiation, with the bound
/// e^-1 (m/e)^m (e B(p) - 1). At p = 4 this is the right derivative.
DerivativeValue L_derivative(double p, unsigned m);

/// m-th p-derivative of K by term-wise differentiation, with the bound
/// (m/e)^m K(p+1). At p = 4 this is the right derivative.
DerivativeValue K_derivative(double p, unsigned m);

/// d/dp of the closed-form K on (2, 4]; at p = 4 the left derivative.
double K_closed_form_derivative(double p);

}  // namespace rosenthal
