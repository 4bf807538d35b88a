// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rosenthal/errors.hpp"
#include "rosenthal/exact_constants.hpp"

namespace rosenthal {

namespace {

using std::numbers::e;
using std::numbers::ln2;
using std::numbers::pi;

double Delta_of(double p) { return std::log(std::log(p)) / std::log(p); }
double delta_of(double p) { return 1.0 / std::log(p); }

// Root of f on [lo, hi] with f(lo) < 0 < f(hi), f increasing and convex:
// Newton from x0, bisection whenever a step leaves the bracket.
template <class F, class DF>
double safeguarded_newton(F f, DF df, double lo, double hi, double x0) {
  double x = x0;
  for (int it = 0; it < 200; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    (fx < 0.0 ? lo : hi) = x;
    double next = x - fx / df(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * x) return next;
    x = next;
  }
  return x;
}

double eps_plus_of(double p) {
  const double d = Delta_of(p);
  return d + C14() * d * d;
}

double eps_minus_of(double p) {
  const double d = Delta_of(p);
  return d + C15() * (d * d - delta_of(p) * d);
}

// int_a^b exp(-c (x - m)^2 / 2) dx for a, b >= m.
double half_gaussian_window(double c, double a, double b, double m) {
  const double s = std::sqrt(0.5 * c);
  return std::sqrt(pi / (2.0 * c)) * (std::erf(s * (b - m)) - std::erf(s * (a - m)));
}

void finish_bounds(LogBounds& b, double p, double log_peak, BoundMode mode, const char* what) {
  b.psi_upper = std::exp((b.log_upper - log_peak) / p);
  b.psi_lower = std::exp((b.log_lower - log_peak) / p);
  b.holds = b.log_lower <= b.log_series && b.log_series <= b.log_upper;
  b.asserted = mode == BoundMode::strict;
  if (b.asserted && !b.holds) {
    throw InconsistencyError(std::string(what) + " sandwich violated at p = " + std::to_string(p));
  }
}

}  // namespace

ElementaryFactors elementary_factors(double p) {
  if (!(p > e)) throw DomainError("elementary_factors: p must exceed e");
  ElementaryFactors f;
  f.delta = delta_of(p);
  f.Delta = Delta_of(p);
  f.g = p / (e * std::log(p));
  f.h = f.g * (1.0 + f.Delta + f.Delta * f.Delta);
  return f;
}

double g_factor(double p) { return p / (e * std::log(p)); }
double h_factor(double p) { return elementary_factors(p).h; }

double solve_M(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("solve_M: p must be positive");
  const double hi = std::max(e, p);
  const double x0 = p >= e ? p / std::log(p) : 0.5 * (1.0 + hi);
  return safeguarded_newton([p](double x) { return x * std::log(x) - p; },
                            [](double x) { return std::log(x) + 1.0; }, 1.0, hi, x0);
}

double solve_N(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("solve_N: p must be positive");
  const double hi = std::max(0.5 * e, p);
  const double x0 = p >= e ? p / std::log(2.0 * p) : 0.5 * (0.5 + hi);
  return safeguarded_newton([p](double x) { return x * std::log(2.0 * x) - p; },
                            [](double x) { return std::log(2.0 * x) + 1.0; }, 0.5, hi, x0);
}

double saddle_V(double x, double p) { return p * std::log(x) - x * std::log(x) + x; }
double saddle_W(double x, double p) { return saddle_V(x, p) - x * ln2; }

SaddleExponents saddle_exponents(double p) {
  if (!(p >= e)) throw DomainError("saddle_exponents: p must be >= e");
  const double m = solve_M(p);
  const double n = solve_N(p);
  SaddleExponents s{saddle_V(m, p) / p, saddle_W(n, p) / p};
  for (double f : {0.5, 2.0}) {
    if (saddle_V(f * m, p) / p > s.X || saddle_W(f * n, p) / p > s.Y) {
      throw InconsistencyError("saddle_exponents: sampled point exceeds the maximum");
    }
  }
  return s;
}

double C14() { return 1.0 / (1.0 - Delta_of(kEnvelopeThresholdL)); }

double C15() {
  const double d = Delta_of(kEnvelopeThresholdL);
  return 2.0 / (std::sqrt(1.0 + 4.0 * d * d) + 1.0);
}

Envelopes envelope_values(double p) {
  if (!(p > e)) throw DomainError("envelope_values: p must exceed e");
  Envelopes v;
  const double base = p / std::log(p);
  v.eps = solve_M(p) / base - 1.0;
  v.eps_plus = eps_plus_of(p);
  v.eps_minus = eps_minus_of(p);
  const double d = Delta_of(p);
  v.eps_minus_printed = d + C15() * d * d;
  v.M_plus = base * (1.0 + v.eps_plus);
  v.M_minus = base * (1.0 + v.eps_minus);
  const double base2 = p / std::log(2.0 * p);
  v.N_plus = base2 * (1.0 + eps_plus_of(2.0 * p));
  v.N_minus = base2 * (1.0 + eps_minus_of(2.0 * p));
  return v;
}

Envelopes epsilon_envelopes(double p) {
  if (!(p >= kEnvelopeThresholdL)) throw DomainError("epsilon_envelopes: p must be >= 700");
  const Envelopes v = envelope_values(p);
  const double m = solve_M(p);
  const double n = solve_N(p);
  if (!(v.M_minus <= m && m <= v.M_plus && v.N_minus <= n && n <= v.N_plus)) {
    throw InconsistencyError("epsilon_envelopes: envelope violated at p = " + std::to_string(p));
  }
  return v;
}

double X1_envelope(double p) {
  const double d = Delta_of(p), dl = delta_of(p), ep = eps_plus_of(p);
  return d + dl + d * ep + dl * (ep - std::log1p(ep));
}

double X2_envelope(double p) {
  const double d = Delta_of(p), dl = delta_of(p), em = eps_minus_of(p);
  return d + dl + (std::log1p(em) - em) - dl * em * std::log1p(em);
}

double Y1_envelope(double p) {
  const double d2 = Delta_of(2.0 * p), dl2 = delta_of(2.0 * p), dl = delta_of(p);
  const double ep = eps_plus_of(2.0 * p);
  return d2 + dl2 + (1.0 + ep) * dl * ln2 / (1.0 + dl * ln2) + ep * (d2 + dl2);
}

double Y2_envelope(double p) {
  const double d2 = Delta_of(2.0 * p), dl2 = delta_of(2.0 * p);
  return d2 + dl2 + eps_minus_of(2.0 * p) * (d2 + dl2);
}

LogBounds L_bounds(double p, BoundMode mode) {
  const double min_p = mode == BoundMode::strict ? kEnvelopeThresholdL : 16.0;
  if (!(p >= min_p) || p > 1e6) throw DomainError("L_bounds: p outside the supported range");
  LogBounds b;
  const double X = saddle_exponents(p).X;
  const double lp = std::log(p);
  const double d = Delta_of(p);
  const double f = 1.0 + d + C14() * d * d;

  // e L(p) < exp(pX) [1.5 exp(-pX) + (2pi)^-1/2 + Psi_1 + 2 (2pi)^-1/2 Psi_2]
  const double psi1 = std::sqrt(2.0 * pi * p) * f / lp;
  const double psi2 = std::exp(-lp * lp / (f * f)) * p * f * f / (lp * lp);
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * pi);
  const double bracket = 1.5 * std::exp(-p * X) + inv_sqrt_2pi + psi1 + 2.0 * inv_sqrt_2pi * psi2;
  b.log_upper = p * X + std::log(bracket) - 1.0;

  // e L(p) >= sum_k k^p/((k+1) k!) >= int over [M(q)+1, M(q)+1+sqrt q] of
  // (2pi)^-1/2 e^-1/12 exp(V(x,q))/(x+1), with V(x,q) >= qX(q) - c (x-M)^2/2.
  const double q = p - 0.5;
  const double mq = solve_M(q);
  const double xq = saddle_V(mq, q);
  const double c = q / (mq * mq) + 1.0 / mq;
  const double a = mq + 1.0;
  const double top = a + std::sqrt(q);
  const double window = half_gaussian_window(c, a, top, mq);
  b.log_lower = -1.0 + std::log(inv_sqrt_2pi) - 1.0 / 12.0 + xq + std::log(window) - std::log(top + 1.0);

  b.log_series = L_series(p).log_value;
  finish_bounds(b, p, p * X, mode, "L_bounds");
  return b;
}

LogBounds K_bounds(double p, BoundMode mode) {
  const double min_p = mode == BoundMode::strict ? kEnvelopeThresholdK : kDiagnosticThresholdK;
  if (!(p >= min_p) || p > 1e6) throw DomainError("K_bounds: p outside the supported range");
  LogBounds b;
  const double Y = saddle_exponents(p).Y;
  const double lp = std::log(p);
  const double ep = eps_plus_of(2.0 * p);
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * pi);

  // K(p) <= 2 e^-3/4 exp(pY) [(2pi)^-1/2 + sqrt(p)(1+eps+(2p))/log(2p)
  //   + 2 (2pi)^-1/2 p log^-2 p (1+eps+(2p))^2 exp(-log^2 p / (2 (1+eps+(2p))^2))]
  const double far = 2.0 * inv_sqrt_2pi * p / (lp * lp) * (1.0 + ep) * (1.0 + ep) *
                     std::exp(-0.5 * lp * lp / ((1.0 + ep) * (1.0 + ep)));
  const double bracket = inv_sqrt_2pi + std::sqrt(p) * (1.0 + ep) / std::log(2.0 * p) + far;
  b.log_upper = ln2 - 0.75 + p * Y + std::log(bracket);

  // e K(p) / 2 > sum_n n^p 2^-n / n! >= int over [N(q)+1, N(q)+1+sqrt q] of
  // (2pi)^-1/2 e^-1/12 exp(W(x,q)).
  const double q = p - 0.5;
  const double nq = solve_N(q);
  const double yq = saddle_W(nq, q);
  const double c = q / (nq * nq) + 1.0 / nq;
  const double a = nq + 1.0;
  const double window = half_gaussian_window(c, a, a + std::sqrt(q), nq);
  b.log_lower = ln2 - 1.0 + std::log(inv_sqrt_2pi) - 1.0 / 12.0 + yq + std::log(window);

  b.log_series = K_series(p).log_value;
  finish_bounds(b, p, p * Y, mode, "K_bounds");
  return b;
}

double expansion_G(double p) {
  if (!(p >= 16.0)) throw DomainError("expansion_G: p must be >= 16");
  const auto f = elementary_factors(p);
  return f.g * (1.0 + f.Delta + f.delta + f.Delta * f.Delta + f.Delta * f.delta);
}

double expansion_S(double p) {
  if (!(p >= 16.0)) throw DomainError("expansion_S: p must be >= 16");
  const auto f = elementary_factors(p);
  return f.g * (1.0 + f.Delta + (1.0 - ln2) * f.delta + f.Delta * f.Delta);
}

Theorem3Forms theorem3_forms(double p) {
  if (!(p >= e)) throw DomainError("theorem3_forms: p must be >= e");
  const double m = solve_M(p);
  const double n = solve_N(p);
  return {std::pow(m, 1.0 - m / p) * std::exp(m / p), n * std::pow(e / (2.0 * n), n / p)};
}

AsymptoticBundle make_bundle(double p) {
  AsymptoticBundle b;
  b.p = p;
  const auto f = elementary_factors(p);
  b.g = f.g;
  b.h = f.h;
  b.delta = f.delta;
  b.Delta = f.Delta;
  b.M = solve_M(p);
  b.N = solve_N(p);
  const auto s = saddle_exponents(p);
  b.X = s.X;
  b.Y = s.Y;
  const auto env = p >= kEnvelopeThresholdL ? epsilon_envelopes(p) : envelope_values(p);
  b.eps = env.eps;
  b.eps_plus = env.eps_plus;
  b.eps_minus = env.eps_minus;
  b.M_plus = env.M_plus;
  b.M_minus = env.M_minus;
  b.N_plus = env.N_plus;
  b.N_minus = env.N_minus;
  if (p >= 16.0 && p <= 1e6) {
    b.L = L_bounds(p, p >= kEnvelopeThresholdL ? BoundMode::strict : BoundMode::diagnostic);
  }
  if (p >= kDiagnosticThresholdK && p <= 1e6) {
    b.K = K_bounds(p, p >= kEnvelopeThresholdK ? BoundMode::strict : BoundMode::diagnostic);
  }
  return b;
}

}  // namespace rosenthal
