// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Photon-counting Monte Carlo: inverse-CDF sampling of the photon-number
// distribution and bootstrap-error estimates of the number-basis witnesses.
// Quadrature (Hong-Mandel) witnesses are out of scope by design: photon
// counting cannot produce homodyne statistics.
//
// Determinism contract: a fixed (state, shots, seed, resamples) tuple yields
// an identical estimate and standard error on a given platform. The generator
// is mt19937_64; uniforms take the top 53 bits of each draw.
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "focknc/fock_state.hpp"

namespace focknc {

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::uint32_t resamples = 0;
};

inline constexpr std::uint32_t default_bootstrap_resamples = 200;

// Cumulative photon-number distribution; final entry is exactly 1.
std::vector<double> cumulative_distribution(const FockState& state);

// One photon-number draw by binary search of the CDF.
std::uint32_t sample_photon_number(std::span<const double> cdf, std::mt19937_64& rng);

// Plug-in estimate of d(l) from the sampled falling-factorial and mean;
// standard error by nonparametric bootstrap over the sample histogram.
McEstimate estimate_hoa(const FockState& state, std::uint32_t l, std::uint64_t shots,
                        std::uint64_t seed,
                        std::uint32_t resamples = default_bootstrap_resamples);

// Plug-in estimate of d_h(l): sample central moment minus the exact Poisson
// central moment at the sample mean.
McEstimate estimate_hosps(const FockState& state, std::uint32_t l, std::uint64_t shots,
                          std::uint64_t seed,
                          std::uint32_t resamples = default_bootstrap_resamples);

}  // namespace focknc
