// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

namespace rosenthal {

/// A positive quantity carried as its natural logarithm, with a rigorous
/// bound on the relative truncation error of the series that produced it.
struct SeriesValue {
  double log_value = -std::numeric_limits<double>::infinity();
  double rel_tail_bound = 0.0;
  std::int64_t terms_used = 0;

  double value() const { return std::exp(log_value); }
};

/// Default relative tolerance for a series at exponent p.
inline double default_tolerance(double p) { return p <= 1e3 ? 1e-13 : 1e-10; }

/// Running log-sum-exp. Terms are added in log scale; the scale follows the
/// largest term seen so far.
class LogSumAccumulator {
 public:
  void add(double log_term) {
    if (log_term == -std::numeric_limits<double>::infinity()) return;
    if (log_term > scale_) {
      sum_ = sum_ * std::exp(scale_ - log_term) + 1.0;
      scale_ = log_term;
    } else {
      sum_ += std::exp(log_term - scale_);
    }
  }

  /// Natural log of the accumulated sum; -inf when nothing was added.
  double log_sum() const {
    return sum_ > 0.0 ? scale_ + std::log(sum_) : -std::numeric_limits<double>::infinity();
  }

 private:
  double scale_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

/// Description of a nonnegative series sum_{n >= first} t_n that is
/// unimodal past `first` in the sense required by the tail bounds below.
struct LogSeriesSpec {
  /// log t_n, or -inf for a zero term.
  std::function<double(std::int64_t)> log_term;
  /// Upper bound on t_{n+1}/t_n valid for all indices >= n. Must be
  /// nonincreasing in n.
  std::function<double(std::int64_t)> up_ratio;
  /// Upper bound on t_{n-1}/t_n valid for all indices <= n (down to
  /// `first`). Must be nondecreasing in n.
  std::function<double(std::int64_t)> down_ratio;
  std::int64_t first = 0;
  /// Index to start from; ideally the largest term.
  std::int64_t start = 0;
};

/// Sums the series outward from `spec.start` in both directions until the
/// geometric tail bounds on both sides fall below `tol` relative to the
/// running sum. Throws BudgetError when `max_terms` is exceeded.
SeriesValue sum_log_series(const LogSeriesSpec& spec, double tol,
                           std::int64_t max_terms = 50'000'000);

}  // namespace rosenthal
