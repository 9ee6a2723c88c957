// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "focknc/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace focknc {

namespace {

void check_order(std::uint32_t requested, std::uint32_t max_order, const char* what) {
  if (requested > max_order)
    throw std::invalid_argument(std::string(what) + ": order " +
                                std::to_string(requested) + " exceeds max order " +
                                std::to_string(max_order));
}

// m(m-1)...(m-k+1) as a double product; the factorial ratio (j+k)!/j! without
// gamma-function round trips. Well inside double range for every supported
// order.
double falling_factorial(std::size_t m, std::uint32_t k) {
  double r = 1.0;
  for (std::uint32_t i = 0; i < k; ++i) r *= static_cast<double>(m - i);
  return r;
}

// phi <- a^times phi (amplitude view): out[j] = sqrt(j+1) in[j+1], repeated.
std::vector<std::complex<double>> apply_annihilation(
    std::vector<std::complex<double>> v, std::uint32_t times) {
  for (std::uint32_t t = 0; t < times; ++t) {
    if (v.size() <= 1) return {std::complex<double>{}};
    std::vector<std::complex<double>> out(v.size() - 1);
    for (std::size_t j = 0; j + 1 < v.size(); ++j)
      out[j] = std::sqrt(static_cast<double>(j + 1)) * v[j + 1];
    v = std::move(out);
  }
  return v;
}

}  // namespace

std::complex<double> moment(const FockState& state, MomentKey key,
                            std::uint32_t max_order) {
  const std::uint32_t k = key.dagger_power, l = key.annihilation_power;
  check_order(std::max(k, l), max_order, "moment");

  const auto& c = state.amplitudes();
  if (c.size() <= std::max(k, l)) return {};

  std::complex<double> acc{};
  for (std::size_t j = 0; j + std::max(k, l) < c.size(); ++j) {
    const double coeff =
        std::sqrt(falling_factorial(j + k, k) * falling_factorial(j + l, l));
    acc += std::conj(c[j + k]) * c[j + l] * coeff;
  }
  return acc;
}

std::complex<double> moment_oracle(const FockState& state, MomentKey key,
                                   std::uint32_t max_order) {
  const std::uint32_t k = key.dagger_power, l = key.annihilation_power;
  check_order(std::max(k, l), max_order, "moment_oracle");

  // <a^dag^k a^l> = <a^k psi | a^l psi>.
  const auto phi = apply_annihilation(state.amplitudes(), l);
  const auto chi = apply_annihilation(state.amplitudes(), k);
  std::complex<double> acc{};
  const std::size_t top = std::min(phi.size(), chi.size());
  for (std::size_t j = 0; j < top; ++j) acc += std::conj(chi[j]) * phi[j];
  return acc;
}

double factorial_moment(const FockState& state, std::uint32_t k,
                        std::uint32_t max_order) {
  check_order(k, max_order, "factorial_moment");
  const auto& c = state.amplitudes();
  double acc = 0.0;
  for (std::size_t m = k; m < c.size(); ++m)
    acc += std::norm(c[m]) * falling_factorial(m, k);
  return acc;
}

double mean_photon_number(const FockState& state) {
  return factorial_moment(state, 1);
}

double quadrature_mean(const FockState& state) {
  const auto& c = state.amplitudes();
  double acc = 0.0;
  for (std::size_t m = 0; m + 1 < c.size(); ++m)
    acc += std::sqrt(static_cast<double>(m + 1)) * 2.0 *
           (std::conj(c[m]) * c[m + 1]).real();
  return acc;
}

double central_x_moment_oracle(const FockState& state, std::uint32_t n,
                               std::uint32_t max_order) {
  check_order(n, max_order, "central_x_moment_oracle");
  if (n == 0) return 1.0;

  const auto& c = state.amplitudes();
  const double shift = quadrature_mean(state) / std::sqrt(2.0);  // <X>

  // v <- (X - <X>) v, n times; X = (a + a^dag)/sqrt 2 grows the support by
  // one level per application.
  std::vector<std::complex<double>> v(c);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint32_t t = 0; t < n; ++t) {
    std::vector<std::complex<double>> w(v.size() + 1);
    for (std::size_t j = 0; j < w.size(); ++j) {
      std::complex<double> acc{};
      if (j + 1 < v.size())
        acc += std::sqrt(static_cast<double>(j + 1)) * v[j + 1];
      if (j >= 1 && j - 1 < v.size())
        acc += std::sqrt(static_cast<double>(j)) * v[j - 1];
      acc *= inv_sqrt2;
      if (j < v.size()) acc -= shift * v[j];
      w[j] = acc;
    }
    v = std::move(w);
  }

  std::complex<double> acc{};
  for (std::size_t j = 0; j < c.size(); ++j) acc += std::conj(c[j]) * v[j];
  return acc.real();
}

}  // namespace focknc
