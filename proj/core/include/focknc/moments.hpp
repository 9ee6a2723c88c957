// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Normally-ordered moments <a^dag^k a^l>, factorial moments of the photon
// number, and quadrature moments of a truncated Fock-basis state. Each
// closed-form evaluation has an independent ladder-operator oracle used by
// the property tests.
#pragma once

#include <complex>
#include <cstdint>

#include "focknc/fock_state.hpp"

namespace focknc {

// Largest moment order the engine evaluates by default. Orders are small in
// practice (the witnesses use at most 6) but the cap keeps accidental
// high-order requests from silently degrading accuracy.
inline constexpr std::uint32_t default_max_order = 12;

struct MomentKey {
  std::uint32_t dagger_power;
  std::uint32_t annihilation_power;

  std::uint32_t order() const { return dagger_power + annihilation_power; }
};

// <a^dag^k a^l> = sum_j conj(C_{j+k}) C_{j+l} sqrt((j+k)!(j+l)!)/j!.
// Throws std::invalid_argument when max(k, l) exceeds max_order.
std::complex<double> moment(const FockState& state, MomentKey key,
                            std::uint32_t max_order = default_max_order);

// Same quantity via k-fold/l-fold application of the annihilation operator
// and one inner product; deliberately shares no code with moment().
std::complex<double> moment_oracle(const FockState& state, MomentKey key,
                                   std::uint32_t max_order = default_max_order);

// Factorial moment <N^(k)> = <a^dag^k a^k> = <N(N-1)...(N-k+1)>, real.
double factorial_moment(const FockState& state, std::uint32_t k,
                        std::uint32_t max_order = default_max_order);

// Mean photon number <N>.
double mean_photon_number(const FockState& state);

// <a + a^dag> (so <X> = quadrature_mean / sqrt 2 for X = (a + a^dag)/sqrt 2).
double quadrature_mean(const FockState& state);

// <(X - <X>)^n> computed by repeated application of the shifted quadrature
// operator to the amplitude vector; the reference implementation for the
// Hong-Mandel moment formula in witnesses.hpp.
double central_x_moment_oracle(const FockState& state, std::uint32_t n,
                               std::uint32_t max_order = default_max_order);

}  // namespace focknc
