// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// A single-mode bosonic state as a finite, normalized Fock-basis amplitude
// vector C_0..C_Nmax.
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace focknc {

class FockState {
 public:
  // Tail probability a constructor is allowed to discard before
  // re-normalizing an infinite-support photon-number distribution.
  static constexpr double default_truncation_epsilon = 1e-12;

  // Normalizes the raw amplitude vector (L2) and trims trailing zeros.
  // Throws std::invalid_argument on an empty vector, non-finite entries or
  // zero norm.
  static FockState from_amplitudes(std::vector<std::complex<double>> raw,
                                   std::string label = "custom",
                                   double truncation_epsilon = default_truncation_epsilon);

  std::size_t dimension() const { return amplitudes_.size(); }
  std::size_t n_max() const { return amplitudes_.size() - 1; }

  std::complex<double> amplitude(std::size_t n) const {
    return n < amplitudes_.size() ? amplitudes_[n] : std::complex<double>{};
  }
  double probability(std::size_t n) const { return std::norm(amplitude(n)); }

  const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }
  const std::string& label() const { return label_; }
  double truncation_epsilon() const { return truncation_epsilon_; }

 private:
  FockState(std::vector<std::complex<double>> amplitudes, std::string label,
            double truncation_epsilon)
      : amplitudes_(std::move(amplitudes)),
        label_(std::move(label)),
        truncation_epsilon_(truncation_epsilon) {}

  std::vector<std::complex<double>> amplitudes_;
  std::string label_;
  double truncation_epsilon_;
};

}  // namespace focknc
