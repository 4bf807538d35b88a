// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/series.hpp"

#include <algorithm>
#include <string>

#include "rosenthal/errors.hpp"

namespace rosenthal {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(r/(1-r)) for 0 <= r < 1, -inf for r == 0.
double log_geometric_tail(double r) {
  if (r <= 0.0) return kNegInf;
  return std::log(r) - std::log1p(-r);
}

}  // namespace

SeriesValue sum_log_series(const LogSeriesSpec& spec, double tol, std::int64_t max_terms) {
  const std::int64_t start = std::max(spec.start, spec.first);
  LogSumAccumulator acc;

  double first_term = spec.log_term(start);
  acc.add(first_term);
  std::int64_t terms = 1;

  // Upward state: last index summed and its log term.
  std::int64_t up_n = start;
  double up_log = first_term;
  bool up_done = false;
  double up_tail = kNegInf;

  std::int64_t down_n = start;
  double down_log = first_term;
  bool down_done = (start == spec.first);
  double down_tail = kNegInf;

  const double log_tol = std::log(tol) + std::log(0.5);

  auto tail_ok = [&](double log_tail) { return log_tail - acc.log_sum() <= log_tol; };

  while (!(up_done && down_done)) {
    if (terms > max_terms) {
      throw BudgetError("series did not converge within " + std::to_string(max_terms) + " terms");
    }
    if (!up_done) {
      const double r = spec.up_ratio(up_n);
      if (r < 1.0) {
        up_tail = up_log + log_geometric_tail(r);
        if (up_log == kNegInf || tail_ok(up_tail)) up_done = true;
      }
      if (!up_done) {
        ++up_n;
        up_log = spec.log_term(up_n);
        acc.add(up_log);
        ++terms;
      }
    }
    if (!down_done) {
      if (down_n == spec.first) {
        down_done = true;
        down_tail = kNegInf;
      } else {
        const double r = spec.down_ratio(down_n);
        if (r < 1.0) {
          // At most (down_n - first) terms remain; the geometric bound is the
          // tighter of the two.
          const double count = static_cast<double>(down_n - spec.first);
          down_tail = down_log + std::min(log_geometric_tail(r), std::log(count) + std::log(r));
          if (down_log == kNegInf || tail_ok(down_tail)) down_done = true;
        }
        if (!down_done) {
          --down_n;
          down_log = spec.log_term(down_n);
          acc.add(down_log);
          ++terms;
          if (down_n == spec.first) {
            down_done = true;
            down_tail = kNegInf;
          }
        }
      }
    }
  }

  SeriesValue out;
  out.log_value = acc.log_sum();
  out.terms_used = terms;
  LogSumAccumulator tails;
  tails.add(up_tail);
  tails.add(down_tail);
  const double lt = tails.log_sum();
  out.rel_tail_bound = lt == kNegInf ? 0.0 : std::exp(lt - out.log_value);
  return out;
}

}  // namespace rosenthal
