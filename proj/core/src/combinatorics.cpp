// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "focknc/combinatorics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace focknc {

LogValue LogValue::from(double x) {
  if (x == 0.0) return zero();
  return {std::log(std::fabs(x)), x > 0.0 ? 1 : -1};
}

double LogValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(magnitude_log);
}

LogValue operator*(LogValue a, LogValue b) {
  if (a.sign == 0 || b.sign == 0) return LogValue::zero();
  return {a.magnitude_log + b.magnitude_log, a.sign * b.sign};
}

LogValue operator/(LogValue a, LogValue b) {
  if (b.sign == 0) throw std::domain_error("LogValue: division by zero");
  if (a.sign == 0) return LogValue::zero();
  return {a.magnitude_log - b.magnitude_log, a.sign * b.sign};
}

double log_factorial(double n) {
  if (!(n >= 0.0))
    throw std::domain_error("log_factorial: argument must be >= 0, got " +
                            std::to_string(n));
  return std::lgamma(n + 1.0);
}

namespace {

bool is_integer(double x) { return x == std::floor(x); }

}  // namespace

LogValue binomial_real_log(double x, std::uint32_t k) {
  if (!std::isfinite(x))
    throw std::domain_error("binomial_real: non-finite upper argument");
  if (x < 0.0 && is_integer(x))
    throw std::domain_error(
        "binomial_real: gamma pole at negative integer upper argument " +
        std::to_string(x));
  // Falling-factorial product x(x-1)...(x-k+1)/k!; finite for every
  // remaining x and exact in sign.
  LogValue r = LogValue::one();
  for (std::uint32_t j = 1; j <= k; ++j) {
    r = r * LogValue::from(x - k + static_cast<double>(j));
    r = r / LogValue::from(static_cast<double>(j));
  }
  return r;
}

double binomial_real(double x, std::uint32_t k) {
  if (!std::isfinite(x))
    throw std::domain_error("binomial_real: non-finite upper argument");
  if (x < 0.0 && is_integer(x))
    throw std::domain_error(
        "binomial_real: gamma pole at negative integer upper argument " +
        std::to_string(x));
  // Multiply-then-divide keeps every intermediate an exact integer when x is
  // one (each prefix is itself a binomial coefficient).
  double r = 1.0;
  for (std::uint32_t j = 1; j <= k; ++j) {
    r *= x - k + static_cast<double>(j);
    r /= static_cast<double>(j);
  }
  return r;
}

std::int64_t double_factorial(int n) {
  if (n < -1) throw std::domain_error("double_factorial: argument must be >= -1");
  if (n > 33)
    throw std::overflow_error("double_factorial: int64 overflow for n = " +
                              std::to_string(n));
  std::int64_t r = 1;
  for (int j = n; j > 1; j -= 2) r *= j;
  return r;
}

std::uint64_t stirling2(std::uint32_t r, std::uint32_t k) {
  if (k > r) return 0;
  if (r == 0) return 1;  // S2(0,0)
  if (k == 0) return 0;
  // Row-by-row recurrence; row[j] = S2(i, j).
  std::uint64_t row[64] = {0};
  if (r >= 64) throw std::overflow_error("stirling2: order out of range");
  row[0] = 1;  // S2(0,0)
  for (std::uint32_t i = 1; i <= r; ++i) {
    for (std::uint32_t j = std::min(i, k); j >= 1; --j) {
      std::uint64_t scaled;
      if (__builtin_mul_overflow(static_cast<std::uint64_t>(j), row[j], &scaled) ||
          __builtin_add_overflow(scaled, row[j - 1], &row[j]))
        throw std::overflow_error("stirling2: uint64 overflow");
    }
    row[0] = 0;  // S2(i, 0) = 0 for i >= 1
  }
  return row[k];
}

}  // namespace focknc
