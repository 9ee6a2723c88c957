// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Log-space scalars and the combinatorial primitives used by the moment
// engine: factorials, real-argument binomial coefficients, double factorials
// and Stirling numbers of the second kind.
#pragma once

#include <cstdint>
#include <limits>

namespace focknc {

// A real number held as sign and natural log of magnitude, so factorial-scale
// products can be accumulated without overflowing double precision.
struct LogValue {
  double magnitude_log = -std::numeric_limits<double>::infinity();
  int sign = 0;  // -1, 0 or +1; sign == 0 iff the value is exactly zero

  static LogValue zero() { return {}; }
  static LogValue one() { return {0.0, 1}; }
  static LogValue from(double x);

  bool is_zero() const { return sign == 0; }

  // sign * exp(magnitude_log); saturates to +-inf instead of throwing.
  double value() const;

  friend LogValue operator*(LogValue a, LogValue b);
  // Throws std::domain_error when b is zero.
  friend LogValue operator/(LogValue a, LogValue b);
};

// ln(n!) = ln Gamma(n+1) for real n >= 0; negative argument -> std::domain_error.
double log_factorial(double n);

// Generalized binomial coefficient C(x, k) = Gamma(x+1) / (Gamma(k+1) Gamma(x-k+1))
// for real x, evaluated as the falling-factorial product x(x-1)...(x-k+1)/k!.
// Integer x with 0 <= k <= x reproduces Pascal's triangle exactly up to the
// 2^53 representable range. A negative-integer x puts a pole in the numerator
// and raises std::domain_error; a non-negative integer x with k > x gives 0.
double binomial_real(double x, std::uint32_t k);
LogValue binomial_real_log(double x, std::uint32_t k);

// n!! with the empty-product conventions (-1)!! = 0!! = 1.
// n < -1 -> std::domain_error; n > 33 overflows int64 -> std::overflow_error.
std::int64_t double_factorial(int n);

// Stirling number of the second kind via S2(r,k) = k S2(r-1,k) + S2(r-1,k-1).
// k > r yields 0; values beyond uint64 range raise std::overflow_error.
std::uint64_t stirling2(std::uint32_t r, std::uint32_t k);

}  // namespace focknc
