// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// nonzero when any criterion fails. An errata report with
// every value disagreement found along the way is written to the path given
// as the first argument (default acceptance_errata.txt).

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rosenthal/asymptotics.hpp"
#include "rosenthal/cli.hpp"
#include "rosenthal/exact_constants.hpp"
#include "rosenthal/extrema.hpp"
#include "rosenthal/mc_oracle.hpp"
#include "rosenthal/reference_tables.hpp"
#include "rosenthal/special_functions.hpp"

namespace {

using namespace rosenthal;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok    " : "FAILED") + "  " + what);
  }
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<std::string> g_errata;

// ---------------------------------------------------------------------------

Outcome even_exactness() {
  Outcome o;
  const auto t0 = Clock::now();
  for (unsigned m = 1; m <= 10; ++m) {
    const double p = 2.0 * m;
    const BigInt k = K_even_exact(m);
    const BigInt l = L_even_exact(m);
    const auto row = *reference_entry(p);
    // Rows printed as integers must match exactly; rows printed in
    // scientific notation carry six significant digits.
    auto compare = [&](const char* q, const BigInt& v, const std::string& text, double printed) {
      BigInt printed_int;
      bool integer_literal = text.find_first_not_of("0123456789") == std::string::npos;
      if (integer_literal) {
        printed_int = BigInt(text);
        o.check(v == printed_int, fmt("%s(%g) = %s, printed %s", q, p, to_string(v).c_str(), text.c_str()));
      } else {
        const double d = rel(to_double(v), printed);
        o.check(d <= 5e-6, fmt("%s(%g) = %s, printed %s (6 significant digits), rel dev %.2e", q, p,
                               to_string(v).c_str(), text.c_str(), d));
      }
    };
    compare("K", k, row.K_text, row.K);
    compare("L", l, row.L_text, row.L);
    o.check(K_via_polynomial(m) == k, fmt("K_via_polynomial(%u) == K_even_exact", m));
    const double dk = rel(K_series(p).value(), to_double(k));
    const double dl = rel(L_series(p).value(), to_double(l));
    o.check(dk <= 1e-9 && dl <= 1e-9, fmt("series routes at p=%g: rel dev K %.1e, L %.1e", p, dk, dl));
  }
  const double t = seconds_since(t0);
  o.check(t <= 5.0, fmt("runtime %.2f s <= 5 s", t));
  return o;
}

Outcome odd_closed_form() {
  Outcome o;
  const unsigned ps[] = {5, 7, 9};
  const long ints[] = {11, 162, 3425};
  for (int i = 0; i < 3; ++i) {
    const auto v = L_odd_exact(ps[i]);
    const double printed = reference_entry(ps[i])->L;
    o.check(v.integer_part == ints[i], fmt("N_%u = %s", ps[i], to_string(v.integer_part).c_str()));
    o.check(std::abs(v.value - printed) <= 1e-4,
            fmt("L(%u) = %.7f vs printed %.4f, abs dev %.1e", ps[i], v.value, printed, std::abs(v.value - printed)));
  }
  return o;
}

Outcome fractional_rows() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::string> exceed;
  for (const auto& e : reference_tables()) {
    if (e.p < 4.0) continue;
    const auto row = cli::compute_row(e.p);
    for (const auto& line : cli::errata_lines(row)) {
      g_errata.push_back(line);
      exceed.push_back(line);
    }
  }
  // The only exceedance the criterion allows is the K(9) row.
  for (const auto& line : exceed) {
    const bool allowed = line.rfind("p=9 quantity=K ", 0) == 0;
    o.check(allowed, (allowed ? "allowed exceedance: " : "exceedance outside the allowed rows: ") + line);
  }
  if (exceed.empty()) o.check(true, "no exceedances");
  const double left = K_closed_form_derivative(4.0);
  const double printed_left = 3.149195;
  g_errata.push_back(fmt("p=4 quantity=dK/dp(4-0) paper=%.6f computed=%.6f rel_dev=%.3g", printed_left, left,
                         (left - printed_left) / printed_left));
  o.details.push_back(fmt("note    left derivative of the (2,4] branch at 4: %.6f (printed %.6f), in errata", left,
                          printed_left));
  const double t = seconds_since(t0);
  o.check(t <= 60.0, fmt("runtime %.2f s <= 60 s", t));
  return o;
}

Outcome extremal_constants() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto rep = reproduce_theorem1(1);
  for (const auto& e : rep.entries) {
    o.check(e.passes(), fmt("%s = %.7f (published %.6g, |dev| %.2e <= %.0e), argmax %.4f (published %g, tol %g)",
                            e.name.c_str(), e.computed, e.published, std::abs(e.deviation()), e.tolerance, e.argmax,
                            e.published_argmax, e.argmax_tolerance));
  }
  const double t = seconds_since(t0);
  o.check(t <= 120.0, fmt("runtime %.2f s <= 120 s", t));
  return o;
}

Outcome branch_continuity() {
  Outcome o;
  const double closed = S_closed_form(4.0);
  const double series = std::exp(K_series(4.0).log_value / 4.0);
  o.check(std::abs(closed - series) <= 1e-9, fmt("|closed - series| = %.2e", std::abs(closed - series)));
  o.check(std::abs(closed - std::sqrt(2.0)) <= 1e-10 && std::abs(series - std::sqrt(2.0)) <= 1e-10,
          fmt("closed - sqrt2 = %.2e, series - sqrt2 = %.2e", closed - std::sqrt(2.0), series - std::sqrt(2.0)));
  return o;
}

Outcome right_derivative() {
  Outcome o;
  const double dl = L_derivative(4.0, 1).value;
  const double dk = K_derivative(4.0, 1).value;
  o.check(std::abs(dl - 3.86841) <= 1e-3, fmt("dL/dp(4+0) = %.7f vs 3.86841", dl));
  o.check(std::abs(dk - 3.51934) <= 1e-3, fmt("dK/dp(4+0) = %.7f vs 3.51934", dk));
  return o;
}

Outcome sandwich() {
  Outcome o;
  for (double p : {700.0, 2000.0, 1e4}) {
    LogBounds b;
    try {
      b = L_bounds(p);
    } catch (const std::exception& e) {
      o.check(false, fmt("p=%g: %s", p, e.what()));
      continue;
    }
    o.check(b.log_lower <= b.log_series && b.log_series <= b.log_upper,
            fmt("p=%g: %.9f <= %.9f <= %.9f", p, b.log_lower, b.log_series, b.log_upper));
  }
  const double ratio = std::exp(L_bounds(700.0).log_upper / 700.0) / g_factor(700.0);
  o.check(ratio <= 1.77366, fmt("exp(upper/700)/g(700) = %.6f <= 1.77366", ratio));
  return o;
}

Outcome solver_residuals() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> dist(4.0, 1e5);
  double worst_m = 0.0, worst_n = 0.0, worst_rel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double p = dist(rng);
    const double m = solve_M(p);
    const double n = solve_N(p);
    worst_m = std::max(worst_m, std::abs(m * std::log(m) - p) / p);
    worst_n = std::max(worst_n, std::abs(n * std::log(2.0 * n) - p) / p);
    worst_rel = std::max(worst_rel, rel(n, 0.5 * solve_M(2.0 * p)));
  }
  o.check(worst_m <= 1e-12, fmt("max |M log M - p|/p = %.2e", worst_m));
  o.check(worst_n <= 1e-12, fmt("max |N log 2N - p|/p = %.2e", worst_n));
  o.check(worst_rel <= 1e-12, fmt("max rel |N(p) - M(2p)/2| = %.2e", worst_rel));
  return o;
}

Outcome asymptotic_decay() {
  Outcome o;
  const double ps[] = {1e2, 1e3, 1e4, 1e5};
  double eg[4], es[4], tg[4], ts[4];
  for (int i = 0; i < 4; ++i) {
    const double G = G_value(ps[i]);
    const double S = S_value(ps[i]);
    const auto t3 = theorem3_forms(ps[i]);
    eg[i] = std::abs(expansion_G(ps[i]) / G - 1.0);
    es[i] = std::abs(expansion_S(ps[i]) / S - 1.0);
    tg[i] = std::abs(t3.G_form / G - 1.0);
    ts[i] = std::abs(t3.S_form / S - 1.0);
  }
  auto decreasing = [&](const char* name, const double* e) {
    const bool ok = e[0] > e[1] && e[1] > e[2] && e[2] > e[3];
    o.check(ok, fmt("%s rel errors at 1e2..1e5: %.3e %.3e %.3e %.3e", name, e[0], e[1], e[2], e[3]));
  };
  decreasing("expansion_G", eg);
  decreasing("expansion_S", es);
  decreasing("theorem3 G_form", tg);
  decreasing("theorem3 S_form", ts);
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto l = mc_L(4.0, 1000000, 2024);
  const auto k = mc_K(4.0, 1000000, 2024);
  o.check(std::abs(l.mean - 4.0) <= 3.0 * l.std_error,
          fmt("mc_L(4) = %.5f +- %.5f, z = %.2f", l.mean, l.std_error, (l.mean - 4.0) / l.std_error));
  o.check(std::abs(k.mean - 4.0) <= 3.0 * k.std_error,
          fmt("mc_K(4) = %.5f +- %.5f, z = %.2f", k.mean, k.std_error, (k.mean - 4.0) / k.std_error));
  const auto fit = poisson_goodness_of_fit(1.0, 1000000, 2024, 1e-3);
  o.check(fit.passes, fmt("chi-square %.3f on %d dof, critical %.3f", fit.statistic, fit.dof, fit.critical));
  const double t = seconds_since(t0);
  o.check(t <= 30.0, fmt("runtime %.2f s <= 30 s", t));
  return o;
}

Outcome bessel_routes() {
  Outcome o;
  double worst = 0.0;
  for (unsigned n = 0; n <= 30; ++n) {
    worst = std::max(worst, std::abs(bessel_In_one(n) - bessel_In_one_integral(n)));
  }
  o.check(worst <= 1e-12, fmt("max_n<=30 |series - integral| = %.2e", worst));
  const double k6 = K_accelerated(6.0, 1).value();
  const double k10 = K_accelerated(10.0, 2).value();
  o.check(rel(k6, 31.0) <= 1e-8, fmt("K_accelerated(6,1) = %.12f, rel dev %.1e", k6, rel(k6, 31.0)));
  o.check(rel(k10, 6556.0) <= 1e-8, fmt("K_accelerated(10,2) = %.10f, rel dev %.1e", k10, rel(k10, 6556.0)));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string errata_path = argc > 1 ? argv[1] : "acceptance_errata.txt";
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "even-p exactness", even_exactness},
      {2, "odd-p closed form", odd_closed_form},
      {3, "fractional table rows", fractional_rows},
      {4, "extremal constants", extremal_constants},
      {5, "branch continuity at p=4", branch_continuity},
      {6, "right derivatives at p=4", right_derivative},
      {7, "sandwich bounds for L", sandwich},
      {8, "M/N solver residuals", solver_residuals},
      {9, "asymptotic decay", asymptotic_decay},
      {10, "Monte Carlo", monte_carlo},
      {11, "cross-route Bessel", bessel_routes},
  };

  std::vector<std::pair<const Criterion*, Outcome>> results;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << c.id << " (" << c.title << ")\n";
    for (const auto& d : o.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    results.emplace_back(&c, std::move(o));
  }

  std::ofstream errata(errata_path);
  for (const auto& l : g_errata) errata << l << '\n';

  std::cout << "\nsummary\n";
  int failed = 0;
  for (const auto& [c, o] : results) {
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c->id << ": " << c->title << '\n';
    if (!o.pass) ++failed;
  }
  std::cout << failed << " of " << results.size() << " criteria failed; errata written to " << errata_path << '\n';
  return failed == 0 ? 0 : 1;
}
