// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace rosenthal {

/// Pseudo-random stream: std::mt19937_64 seeded from (master seed, stream
/// index) through SplitMix64.
class Rng {
 public:
  static constexpr const char* kGenerator = "mt19937_64/splitmix64-chunked";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::string generator = Rng::kGenerator;
};

/// Samples per independent stream. Streams are merged in index order, so
/// the estimate is the same for any thread count.
inline constexpr std::int64_t kSamplesPerStream = 1 << 16;

/// Mean and standard error of draw(rng) over n_samples draws.
McEstimate mc_estimate(const std::function<double(Rng&)>& draw, std::int64_t n_samples, std::uint64_t seed,
                       unsigned threads = 1);

/// Poisson(lambda) draw: sequential-search inversion for lambda <= 30, PTRS
/// transformed rejection above.
std::int64_t sample_poisson(double lambda, Rng& rng);

/// E|t - 1|^p, t ~ Poisson(1).
McEstimate mc_L(double p, std::int64_t n_samples, std::uint64_t seed, unsigned threads = 1);

/// E|t1 - t2|^p, t1, t2 independent Poisson(1/2).
McEstimate mc_K(double p, std::int64_t n_samples, std::uint64_t seed, unsigned threads = 1);

/// Summand family for the Rosenthal ratio.
struct Family {
  enum class Kind { centered_poisson, rademacher, two_point };
  Kind kind = Kind::rademacher;
  double lambda = 1.0;  // centered_poisson
  double a = 1.0;       // two_point: value a with probability q
  double q = 0.5;       //            and -a q / (1 - q) otherwise

  /// Parses "rademacher", "centered-poisson(L)", "two-point(A,Q)".
  static Family parse(const std::string& id);
  std::string id() const;
  bool symmetric() const;
  /// E|xi|^p and Var xi for a single summand.
  double abs_moment(double p) const;
  double variance() const;
};

/// ||sum xi||_p / max(||sum xi||_2, (sum ||xi||_p^p)^{1/p}) with the
/// numerator estimated by Monte Carlo and the denominator exact. For p >= 4
/// throws InconsistencyError if the estimate exceeds G(p) (1 + 5 se/mean).
McEstimate mc_rosenthal_ratio(const Family& family, std::int64_t n_terms, double p, std::int64_t n_samples,
                              std::uint64_t seed, unsigned threads = 1);

struct GoodnessOfFit {
  double statistic = 0.0;
  int cells = 0;
  int dof = 0;
  double critical = 0.0;
  bool passes = false;
};

/// Pearson chi-square of n Poisson(lambda) draws against the exact cell
/// probabilities. Cells 0, 1, ... are kept while the pooled upper tail has
/// expected count >= 5.
GoodnessOfFit poisson_goodness_of_fit(double lambda, std::int64_t n_samples, std::uint64_t seed,
                                      double significance = 1e-3);

}  // namespace rosenthal
