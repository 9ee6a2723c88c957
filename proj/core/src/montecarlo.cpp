// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "focknc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "focknc/moments.hpp"
#include "focknc/witnesses.hpp"

namespace focknc {

std::vector<double> cumulative_distribution(const FockState& state) {
  std::vector<double> cdf(state.dimension());
  double acc = 0.0;
  for (std::size_t n = 0; n < cdf.size(); ++n) {
    acc += state.probability(n);
    cdf[n] = acc;
  }
  cdf.back() = 1.0;  // guard against rounding in the partial sums
  return cdf;
}

std::uint32_t sample_photon_number(std::span<const double> cdf, std::mt19937_64& rng) {
  // 53-bit uniform in [0, 1); the top bits of one 64-bit draw.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  const auto idx = static_cast<std::size_t>(it - cdf.begin());
  return static_cast<std::uint32_t>(std::min(idx, cdf.size() - 1));
}

namespace {

double falling_factorial(double m, std::uint32_t k) {
  double r = 1.0;
  for (std::uint32_t i = 0; i < k; ++i) r *= m - static_cast<double>(i);
  return r;
}

double int_pow(double base, std::uint32_t e) {
  double r = 1.0;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

using Histogram = std::vector<std::uint64_t>;

double mean_of(const Histogram& hist, std::uint64_t shots) {
  double acc = 0.0;
  for (std::size_t c = 0; c < hist.size(); ++c)
    acc += static_cast<double>(hist[c]) * static_cast<double>(c);
  return acc / static_cast<double>(shots);
}

double hoa_estimate(const Histogram& hist, std::uint64_t shots, std::uint32_t l) {
  const double inv = 1.0 / static_cast<double>(shots);
  double fm = 0.0;
  for (std::size_t c = 0; c < hist.size(); ++c)
    fm += static_cast<double>(hist[c]) * falling_factorial(static_cast<double>(c), l + 1);
  return fm * inv - int_pow(mean_of(hist, shots), l + 1);
}

double hosps_estimate(const Histogram& hist, std::uint64_t shots, std::uint32_t l) {
  const double mean = mean_of(hist, shots);
  const double inv = 1.0 / static_cast<double>(shots);
  double mu = 0.0;
  for (std::size_t c = 0; c < hist.size(); ++c)
    mu += static_cast<double>(hist[c]) * int_pow(static_cast<double>(c) - mean, l + 1);
  return mu * inv - poisson_central_moment(mean, l + 1);
}

// Multinomial resample of the histogram by conditional binomials; identical
// in distribution to redrawing `shots` samples from the empirical law, at
// O(categories) cost per resample.
Histogram resample(const Histogram& hist, std::uint64_t shots, std::mt19937_64& rng) {
  Histogram out(hist.size(), 0);
  std::uint64_t remaining = shots;
  double mass = 1.0;
  const double inv = 1.0 / static_cast<double>(shots);
  for (std::size_t c = 0; c < hist.size() && remaining > 0; ++c) {
    const double pc = static_cast<double>(hist[c]) * inv;
    if (pc <= 0.0) continue;
    double p = pc / mass;
    p = std::clamp(p, 0.0, 1.0);
    std::uint64_t draw;
    if (p >= 1.0) {
      draw = remaining;
    } else {
      std::binomial_distribution<std::uint64_t> dist(remaining, p);
      draw = dist(rng);
    }
    out[c] = draw;
    remaining -= draw;
    mass -= pc;
  }
  if (remaining > 0) out.back() += remaining;
  return out;
}

template <typename Estimator>
McEstimate run_estimate(const FockState& state, std::uint64_t shots, std::uint64_t seed,
                        std::uint32_t resamples, Estimator estimator) {
  if (shots == 0) throw std::invalid_argument("montecarlo: shots must be >= 1");

  std::mt19937_64 rng(seed);
  const auto cdf = cumulative_distribution(state);
  Histogram hist(state.dimension(), 0);
  for (std::uint64_t s = 0; s < shots; ++s)
    ++hist[sample_photon_number(cdf, rng)];

  McEstimate est;
  est.value = estimator(hist, shots);
  est.shots = shots;
  est.seed = seed;
  est.resamples = resamples;

  if (resamples >= 2) {
    std::vector<double> values(resamples);
    for (std::uint32_t b = 0; b < resamples; ++b)
      values[b] = estimator(resample(hist, shots, rng), shots);
    // Bitwise-identical resample values (single-outcome distributions) must
    // report exactly zero error, not mean-accumulation rounding noise.
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo == *hi) return est;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= resamples;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    est.std_error = std::sqrt(ss / (resamples - 1));
  }
  return est;
}

}  // namespace

McEstimate estimate_hoa(const FockState& state, std::uint32_t l, std::uint64_t shots,
                        std::uint64_t seed, std::uint32_t resamples) {
  if (l < 1 || l + 1 > default_max_order)
    throw std::invalid_argument("estimate_hoa: order out of range");
  if (shots < 100) throw std::invalid_argument("estimate_hoa: need at least 100 shots");
  return run_estimate(state, shots, seed, resamples,
                      [l](const Histogram& h, std::uint64_t s) {
                        return hoa_estimate(h, s, l);
                      });
}

McEstimate estimate_hosps(const FockState& state, std::uint32_t l, std::uint64_t shots,
                          std::uint64_t seed, std::uint32_t resamples) {
  if (l < 1 || l + 1 > default_max_order)
    throw std::invalid_argument("estimate_hosps: order out of range");
  if (shots < 100)
    throw std::invalid_argument("estimate_hosps: need at least 100 shots");
  return run_estimate(state, shots, seed, resamples,
                      [l](const Histogram& h, std::uint64_t s) {
                        return hosps_estimate(h, s, l);
                      });
}

}  // namespace focknc
