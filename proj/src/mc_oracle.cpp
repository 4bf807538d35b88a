// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#include "rosenthal/mc_oracle.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include "rosenthal/errors.hpp"
#include "rosenthal/exact_constants.hpp"
#include "rosenthal/moments.hpp"

namespace rosenthal {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(seed ^ splitmix64(stream))) {}

namespace {

struct Moments {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

}  // namespace

McEstimate mc_estimate(const std::function<double(Rng&)>& draw, std::int64_t n_samples, std::uint64_t seed,
                       unsigned threads) {
  if (n_samples < 2) throw DomainError("mc_estimate: need at least two samples");
  const std::int64_t streams = (n_samples + kSamplesPerStream - 1) / kSamplesPerStream;
  std::vector<Moments> parts(static_cast<std::size_t>(streams));
  auto run = [&](std::int64_t s) {
    Rng rng(seed, static_cast<std::uint64_t>(s));
    const std::int64_t count = std::min(kSamplesPerStream, n_samples - s * kSamplesPerStream);
    Moments m;
    for (std::int64_t i = 0; i < count; ++i) m.add(draw(rng));
    parts[static_cast<std::size_t>(s)] = m;
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(streams)));
  if (threads == 1) {
    for (std::int64_t s = 0; s < streams; ++s) run(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::int64_t s = t; s < streams; s += threads) run(s);
      });
    }
    for (auto& th : pool) th.join();
  }
  Moments total;
  for (const auto& m : parts) total.merge(m);

  McEstimate out;
  out.mean = total.mean;
  out.n_samples = n_samples;
  out.seed = seed;
  const double var = total.m2 / static_cast<double>(n_samples - 1);
  out.std_error = std::sqrt(var / static_cast<double>(n_samples));
  return out;
}

std::int64_t sample_poisson(double lambda, Rng& rng) {
  if (!(lambda > 0.0) || lambda > 1e3) throw DomainError("sample_poisson: lambda must lie in (0, 1e3]");
  if (lambda <= 30.0) {
    const double u = rng.uniform();
    double prob = std::exp(-lambda);
    double cdf = prob;
    std::int64_t k = 0;
    while (u >= cdf && k < 1000) {
      ++k;
      prob *= lambda / static_cast<double>(k);
      cdf += prob;
    }
    return k;
  }
  // Hormann's PTRS.
  const double slam = std::sqrt(lambda);
  const double loglam = std::log(lambda);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const auto k = static_cast<std::int64_t>(std::floor((2.0 * a / us + b) * u + lambda + 0.43));
    if (us >= 0.07 && v <= vr) return k;
    if (k < 0 || (us < 0.013 && v > us)) continue;
    const double kk = static_cast<double>(k);
    if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <= -lambda + kk * loglam - std::lgamma(kk + 1.0)) {
      return k;
    }
  }
}

McEstimate mc_L(double p, std::int64_t n_samples, std::uint64_t seed, unsigned threads) {
  if (!(p >= 2.0 && p <= 12.0)) throw DomainError("mc_L: p must lie in [2, 12]");
  if (n_samples < 10000) throw DomainError("mc_L: need at least 1e4 samples");
  return mc_estimate(
      [p](Rng& rng) { return std::pow(std::abs(static_cast<double>(sample_poisson(1.0, rng)) - 1.0), p); },
      n_samples, seed, threads);
}

McEstimate mc_K(double p, std::int64_t n_samples, std::uint64_t seed, unsigned threads) {
  if (!(p >= 2.0 && p <= 12.0)) throw DomainError("mc_K: p must lie in [2, 12]");
  if (n_samples < 10000) throw DomainError("mc_K: need at least 1e4 samples");
  return mc_estimate(
      [p](Rng& rng) {
        const auto t1 = sample_poisson(0.5, rng);
        const auto t2 = sample_poisson(0.5, rng);
        return std::pow(std::abs(static_cast<double>(t1 - t2)), p);
      },
      n_samples, seed, threads);
}

// ---------------------------------------------------------------------------
// Families

Family Family::parse(const std::string& id) {
  Family f;
  auto args = [&](const std::string& prefix) -> std::vector<double> {
    if (id.rfind(prefix + "(", 0) != 0 || id.back() != ')') throw DomainError("unknown family id: " + id);
    std::string inner = id.substr(prefix.size() + 1, id.size() - prefix.size() - 2);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream in(inner);
    std::vector<double> v;
    double x = 0.0;
    while (in >> x) v.push_back(x);
    if (!in.eof()) throw DomainError("malformed family arguments: " + id);
    return v;
  };
  if (id == "rademacher") {
    f.kind = Kind::rademacher;
  } else if (id.rfind("centered-poisson", 0) == 0) {
    const auto v = args("centered-poisson");
    if (v.size() != 1 || !(v[0] > 0.0)) throw DomainError("centered-poisson takes one positive rate");
    f.kind = Kind::centered_poisson;
    f.lambda = v[0];
  } else if (id.rfind("two-point", 0) == 0) {
    const auto v = args("two-point");
    if (v.size() != 2 || !(v[1] > 0.0 && v[1] < 1.0)) throw DomainError("two-point takes (a, q) with 0 < q < 1");
    f.kind = Kind::two_point;
    f.a = v[0];
    f.q = v[1];
  } else {
    throw DomainError("unknown family id: " + id);
  }
  return f;
}

std::string Family::id() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::rademacher: out << "rademacher"; break;
    case Kind::centered_poisson: out << "centered-poisson(" << lambda << ")"; break;
    case Kind::two_point: out << "two-point(" << a << "," << q << ")"; break;
  }
  return out.str();
}

bool Family::symmetric() const {
  return kind == Kind::rademacher || (kind == Kind::two_point && q == 0.5);
}

double Family::abs_moment(double p) const {
  switch (kind) {
    case Kind::rademacher: return 1.0;
    case Kind::centered_poisson:
      return std::exp(weighted_abs_moment(lambda, p, lambda).log_value + 1.0 - lambda);
    case Kind::two_point: {
      const double b = -a * q / (1.0 - q);
      return q * std::pow(std::abs(a), p) + (1.0 - q) * std::pow(std::abs(b), p);
    }
  }
  return 0.0;
}

double Family::variance() const {
  switch (kind) {
    case Kind::rademacher: return 1.0;
    case Kind::centered_poisson: return lambda;
    case Kind::two_point: {
      const double b = -a * q / (1.0 - q);
      return q * a * a + (1.0 - q) * b * b;
    }
  }
  return 0.0;
}

McEstimate mc_rosenthal_ratio(const Family& family, std::int64_t n_terms, double p, std::int64_t n_samples,
                              std::uint64_t seed, unsigned threads) {
  if (n_terms < 1 || n_terms > 10000) throw DomainError("mc_rosenthal_ratio: n_terms must lie in [1, 1e4]");
  if (!(p >= 2.0 && p <= 12.0)) throw DomainError("mc_rosenthal_ratio: p must lie in [2, 12]");
  const double n = static_cast<double>(n_terms);
  if (family.kind == Family::Kind::centered_poisson && n * family.lambda > 1e3) {
    throw DomainError("mc_rosenthal_ratio: total Poisson rate above 1e3");
  }

  std::function<double(Rng&)> draw;
  switch (family.kind) {
    case Family::Kind::centered_poisson: {
      const double rate = n * family.lambda;
      draw = [rate, p](Rng& rng) {
        return std::pow(std::abs(static_cast<double>(sample_poisson(rate, rng)) - rate), p);
      };
      break;
    }
    case Family::Kind::rademacher:
      draw = [n_terms, p](Rng& rng) {
        std::binomial_distribution<std::int64_t> bin(n_terms, 0.5);
        return std::pow(std::abs(static_cast<double>(2 * bin(rng.engine()) - n_terms)), p);
      };
      break;
    case Family::Kind::two_point: {
      const double a = family.a;
      const double b = -family.a * family.q / (1.0 - family.q);
      const double q = family.q;
      draw = [n_terms, p, a, b, q](Rng& rng) {
        std::binomial_distribution<std::int64_t> bin(n_terms, q);
        const double k = static_cast<double>(bin(rng.engine()));
        return std::pow(std::abs(a * k + b * (static_cast<double>(n_terms) - k)), p);
      };
      break;
    }
  }

  const McEstimate raw = mc_estimate(draw, n_samples, seed, threads);
  const double denom = std::max(std::sqrt(n * family.variance()), std::pow(n * family.abs_moment(p), 1.0 / p));
  McEstimate out = raw;
  out.mean = std::pow(raw.mean, 1.0 / p) / denom;
  out.std_error = raw.mean > 0.0 ? out.mean * raw.std_error / (p * raw.mean) : 0.0;

  if (p >= 4.0 && out.mean > 0.0) {
    const double limit = G_value(p) * (1.0 + 5.0 * out.std_error / out.mean);
    if (out.mean > limit) {
      throw InconsistencyError("mc_rosenthal_ratio: estimate exceeds G(p) for family " + family.id());
    }
  }
  return out;
}

GoodnessOfFit poisson_goodness_of_fit(double lambda, std::int64_t n_samples, std::uint64_t seed,
                                      double significance) {
  const double n = static_cast<double>(n_samples);
  // Cell probabilities P(k) for k < kmax, pooled tail P(>= kmax).
  std::vector<double> probs;
  double prob = std::exp(-lambda);
  double cdf = 0.0;
  for (int k = 0;; ++k) {
    if (n * (1.0 - cdf - prob) < 5.0) break;
    probs.push_back(prob);
    cdf += prob;
    prob *= lambda / (k + 1.0);
  }
  probs.push_back(1.0 - cdf);
  const auto cells = static_cast<int>(probs.size());

  std::vector<std::int64_t> counts(probs.size(), 0);
  Rng rng(seed);
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const auto k = sample_poisson(lambda, rng);
    ++counts[static_cast<std::size_t>(std::min<std::int64_t>(k, cells - 1))];
  }

  GoodnessOfFit fit;
  fit.cells = cells;
  fit.dof = cells - 1;
  for (int c = 0; c < cells; ++c) {
    const double expected = n * probs[c];
    const double d = static_cast<double>(counts[c]) - expected;
    fit.statistic += d * d / expected;
  }
  boost::math::chi_squared dist(fit.dof);
  fit.critical = boost::math::quantile(boost::math::complement(dist, significance));
  fit.passes = fit.statistic <= fit.critical;
  return fit;
}

}  // namespace rosenthal
