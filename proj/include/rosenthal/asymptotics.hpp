// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

namespace rosenthal {

inline constexpr double kEnvelopeThresholdL = 700.0;   // P_0
inline constexpr double kEnvelopeThresholdK = 1e6;     // P_1
inline constexpr double kDiagnosticThresholdK = 1e3;

/// g = p/(e log p), delta = 1/log p, Delta = log log p / log p,
/// h = g (1 + Delta + Delta^2).
struct ElementaryFactors {
  double g = 0.0;
  double h = 0.0;
  double delta = 0.0;
  double Delta = 0.0;
};

ElementaryFactors elementary_factors(double p);
double g_factor(double p);
double h_factor(double p);

/// Root of x log x = p in (1, inf), p > 0.
double solve_M(double p);
/// Root of x log(2x) = p in (1/2, inf), p > 0.
double solve_N(double p);

/// V(x,p) = p log x - x log x + x and W(x,p) = V(x,p) - x log 2.
double saddle_V(double x, double p);
double saddle_W(double x, double p);

struct SaddleExponents {
  double X = 0.0;  // V(M(p), p) / p
  double Y = 0.0;  // W(N(p), p) / p
};

/// Throws InconsistencyError if V or W sampled at half and double the
/// maximizer exceeds the claimed maximum.
SaddleExponents saddle_exponents(double p);

/// 1/(1 - Delta(P_0)) ~ 1.402365.
double C14();
/// 2/(sqrt(1 + 4 Delta(P_0)^2) + 1) ~ 0.928958.
double C15();

struct Envelopes {
  double eps = 0.0;  // from the solved M: M log p / p - 1
  double eps_plus = 0.0;
  double eps_minus = 0.0;
  double eps_minus_printed = 0.0;  // Delta + C15 Delta^2; does not bound eps from below
  double M_plus = 0.0;
  double M_minus = 0.0;
  double N_plus = 0.0;
  double N_minus = 0.0;
};

/// Envelope values without any domain check beyond p > e^e / 2.
Envelopes envelope_values(double p);

/// Envelopes for p >= P_0; throws InconsistencyError unless
/// M_minus <= M <= M_plus and N_minus <= N <= N_plus.
Envelopes epsilon_envelopes(double p);

/// Upper/lower envelopes of the saddle exponents' correction terms.
double X1_envelope(double p);
double X2_envelope(double p);
double Y1_envelope(double p);
double Y2_envelope(double p);

enum class BoundMode { strict, diagnostic };

/// Logarithmic sandwich of L(p) or K(p) together with the series value.
struct LogBounds {
  double log_lower = 0.0;
  double log_upper = 0.0;
  double log_series = 0.0;
  /// p-th roots of the bracket factors: exp((log_upper - p X)/p) and
  /// exp((log_lower - p X)/p) for L; same with Y for K.
  double psi_upper = 0.0;
  double psi_lower = 0.0;
  bool asserted = false;
  bool holds = false;
};

/// Strict mode requires p >= 700 and throws InconsistencyError if the
/// sandwich fails; diagnostic mode accepts p >= 16 and only reports.
LogBounds L_bounds(double p, BoundMode mode = BoundMode::strict);

/// Strict mode requires p >= 1e6; diagnostic mode accepts p >= 1e3.
LogBounds K_bounds(double p, BoundMode mode = BoundMode::strict);

/// g (1 + Delta + delta + Delta^2 + Delta delta), p >= 16.
double expansion_G(double p);
/// g (1 + Delta + (1 - log 2) delta + Delta^2), p >= 16.
double expansion_S(double p);

struct Theorem3Forms {
  double G_form = 0.0;  // M^{1 - M/p} exp(M/p)
  double S_form = 0.0;  // N (e/(2N))^{N/p}
};
Theorem3Forms theorem3_forms(double p);

struct AsymptoticBundle {
  double p = 0.0;
  double g = 0.0, h = 0.0, delta = 0.0, Delta = 0.0;
  double M = 0.0, N = 0.0;
  double X = 0.0, Y = 0.0;
  double eps = 0.0, eps_plus = 0.0, eps_minus = 0.0;
  double M_plus = 0.0, M_minus = 0.0, N_plus = 0.0, N_minus = 0.0;
  std::optional<LogBounds> L;
  std::optional<LogBounds> K;
};

/// Everything above at one p (p > e^e). Bounds are filled when p is in the
/// strict or diagnostic range; strict ranges are asserted.
AsymptoticBundle make_bundle(double p);

}  // namespace rosenthal
