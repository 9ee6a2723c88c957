// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "focknc/fock_state.hpp"

#include <cmath>
#include <stdexcept>

namespace focknc {

FockState FockState::from_amplitudes(std::vector<std::complex<double>> raw,
                                     std::string label,
                                     double truncation_epsilon) {
  if (raw.empty())
    throw std::invalid_argument("FockState: empty amplitude vector");
  if (!(truncation_epsilon >= 0.0 && truncation_epsilon < 1.0))
    throw std::invalid_argument("FockState: truncation epsilon must be in [0, 1)");

  double norm2 = 0.0;
  for (const auto& c : raw) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("FockState: non-finite amplitude");
    norm2 += std::norm(c);
  }
  if (!(norm2 > 0.0) || !std::isfinite(norm2))
    throw std::invalid_argument("FockState: amplitude vector has zero or invalid norm");

  while (raw.size() > 1 && raw.back() == std::complex<double>{}) raw.pop_back();

  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : raw) c *= inv;

  return FockState(std::move(raw), std::move(label), truncation_epsilon);
}

}  // namespace focknc
