// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "focknc/witnesses.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "focknc/combinatorics.hpp"

namespace focknc {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

double int_pow(double base, std::uint32_t e) {
  double r = 1.0;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

// The HOSPS construction: n-th central moment of the photon number written as
// the Stirling-number double sum over factorial moments F_k,
//   sum_r C(n,r) (-1)^{n-r} <N>^{n-r} sum_k S2(r,k) F_k.
// Feeding F_k = <N>^k instead gives exactly the Poisson reference at the same
// mean, so the witness is the difference of two evaluations.
double stirling_central_moment(std::uint32_t n, double mean,
                               const std::vector<double>& factorial_moments) {
  double acc = 0.0;
  for (std::uint32_t r = 0; r <= n; ++r) {
    double inner = 0.0;
    for (std::uint32_t k = 0; k <= r; ++k)
      inner += static_cast<double>(stirling2(r, k)) * factorial_moments[k];
    const double sign = ((n - r) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binomial_real(n, r) * int_pow(mean, n - r) * inner;
  }
  return acc;
}

}  // namespace

double hoa_d(const FockState& state, std::uint32_t l, std::uint32_t max_order) {
  require(l >= 1, "hoa_d: order must be >= 1");
  const double mean = mean_photon_number(state);
  return factorial_moment(state, l + 1, max_order) - int_pow(mean, l + 1);
}

double hosps_dh(const FockState& state, std::uint32_t l, std::uint32_t max_order) {
  require(l >= 1, "hosps_dh: order must be >= 1");
  const std::uint32_t n = l + 1;
  const double mean = mean_photon_number(state);

  std::vector<double> fm(n + 1), poisson_fm(n + 1);
  for (std::uint32_t k = 0; k <= n; ++k) {
    fm[k] = factorial_moment(state, k, max_order);
    poisson_fm[k] = int_pow(mean, k);  // <N^(k)> of a Poisson law is <N>^k
  }
  return stirling_central_moment(n, mean, fm) -
         stirling_central_moment(n, mean, poisson_fm);
}

double hos_central_moment(const FockState& state, std::uint32_t n,
                          std::uint32_t max_order) {
  require(n >= 2 && n % 2 == 0, "hos_central_moment: order must be even and >= 2");
  require(n <= max_order, "hos_central_moment: order exceeds max order");

  const double xbar = quadrature_mean(state);  // <a + a^dag>

  // <(X - <X>)^n> = 2^{-n/2} sum_{r,i,k} (-1)^r C(n,r) xbar^{n-r} C(r,2i)
  //                 (2i-1)!! C(r-2i,k) <a^dag^k a^{r-2i-k}>
  // (binomial expansion of the shift, Wick-ordering of (a + a^dag)^r).
  std::complex<double> acc{};
  for (std::uint32_t r = 0; r <= n; ++r) {
    const double rsign = (r % 2 == 0) ? 1.0 : -1.0;
    const double outer = rsign * binomial_real(n, r) * int_pow(xbar, n - r);
    for (std::uint32_t i = 0; 2 * i <= r; ++i) {
      const double pairings = binomial_real(r, 2 * i) *
                              static_cast<double>(double_factorial(2 * static_cast<int>(i) - 1));
      const std::uint32_t rest = r - 2 * i;
      for (std::uint32_t k = 0; k <= rest; ++k) {
        acc += outer * pairings * binomial_real(rest, k) *
               moment(state, {k, rest - k}, max_order);
      }
    }
  }
  return acc.real() * std::pow(0.5, n / 2.0);
}

double hos_shm(const FockState& state, std::uint32_t n, ShmNormalization norm,
               std::uint32_t max_order) {
  const double mu = hos_central_moment(state, n, max_order);
  double boundary = std::pow(0.5, n / 2.0);
  if (norm == ShmNormalization::gaussian)
    boundary *= static_cast<double>(double_factorial(static_cast<int>(n) - 1));
  return (mu - boundary) / boundary;
}

double poisson_central_moment(double mean, std::uint32_t n) {
  require(mean >= 0.0 && std::isfinite(mean), "poisson_central_moment: mean must be >= 0");
  if (n == 0) return 1.0;
  if (mean == 0.0) return 0.0;

  // Brute-force sum over the mass function; the range covers far more than
  // 25 standard deviations, leaving a tail below 1e-14 of the total.
  const auto top =
      static_cast<std::uint64_t>(std::ceil(mean + 25.0 * std::sqrt(mean) + 80.0));
  const double log_mean = std::log(mean);
  double acc = 0.0;
  for (std::uint64_t j = 0; j <= top; ++j) {
    const double jj = static_cast<double>(j);
    const double log_p = -mean + jj * log_mean - log_factorial(jj);
    acc += int_pow(jj - mean, n) * std::exp(log_p);
  }
  return acc;
}

double evaluate_witness(const FockState& state, WitnessSelector sel,
                        ShmNormalization norm, std::uint32_t max_order) {
  switch (sel.kind) {
    case WitnessSelector::Kind::hoa:
      return hoa_d(state, sel.order, max_order);
    case WitnessSelector::Kind::hosps:
      return hosps_dh(state, sel.order, max_order);
    case WitnessSelector::Kind::hos:
      return hos_shm(state, sel.order, norm, max_order);
  }
  throw std::logic_error("evaluate_witness: bad selector");
}

WitnessReport witness_report(const FockState& state,
                             const std::vector<std::uint32_t>& hoa_orders,
                             const std::vector<std::uint32_t>& hosps_orders,
                             const std::vector<std::uint32_t>& hos_orders,
                             ShmNormalization norm, std::uint32_t max_order) {
  WitnessReport report;
  report.state_label = state.label();
  report.truncation_epsilon = state.truncation_epsilon();
  report.max_order = max_order;
  for (auto l : hoa_orders) report.hoa[l] = hoa_d(state, l, max_order);
  for (auto l : hosps_orders) report.hosps[l] = hosps_dh(state, l, max_order);
  for (auto n : hos_orders) {
    report.hos[n] = hos_shm(state, n, norm, max_order);
    report.central_x_moments[n] = hos_central_moment(state, n, max_order);
  }
  return report;
}

namespace {

int signum_with_tolerance(double v, double zero_tolerance) {
  if (v > zero_tolerance) return 1;
  if (v < -zero_tolerance) return -1;
  return 0;
}

}  // namespace

std::vector<ZeroCrossing> find_zero_crossings(const StateSpec& base,
                                              std::string_view param, double lo,
                                              double hi, WitnessSelector sel,
                                              const CrossingOptions& options) {
  require(lo < hi, "find_zero_crossings: need lo < hi");
  require(options.grid_points >= 2, "find_zero_crossings: need at least 2 grid points");
  get_parameter(base, param);  // validates the name

  auto value_at = [&](double x) {
    const auto state = make_state(with_parameter(base, param, x));
    return evaluate_witness(state, sel, options.norm, options.max_order);
  };

  std::vector<ZeroCrossing> crossings;
  const bool integer_scan =
      (parameter_is_integer(base, param) &&
       !parameter_supports_continuation(base, param)) ||
      options.force_integer_grid;
  if (integer_scan) {
    const auto first = static_cast<std::int64_t>(std::ceil(lo));
    const auto last = static_cast<std::int64_t>(std::floor(hi));
    int prev_sign = 0;
    double prev_x = 0.0;
    for (std::int64_t i = first; i <= last; ++i) {
      const double x = static_cast<double>(i);
      const int s = signum_with_tolerance(value_at(x), options.zero_tolerance);
      if (prev_sign != 0 && s != 0 && s != prev_sign)
        crossings.push_back({0.5 * (prev_x + x), prev_x, x, false});
      if (s != 0) {
        prev_sign = s;
        prev_x = x;
      }
    }
    return crossings;
  }

  const double step = (hi - lo) / (options.grid_points - 1);
  int prev_sign = 0;
  double prev_x = lo;
  for (std::uint32_t i = 0; i < options.grid_points; ++i) {
    const double x = (i + 1 == options.grid_points) ? hi : lo + step * i;
    const int s = signum_with_tolerance(value_at(x), options.zero_tolerance);
    if (prev_sign != 0 && s != 0 && s != prev_sign) {
      double a = prev_x, b = x;
      int sign_a = prev_sign;
      double position = 0.5 * (a + b);
      while (b - a > options.position_tolerance) {
        const double mid = 0.5 * (a + b);
        const int sm = signum_with_tolerance(value_at(mid), options.zero_tolerance);
        if (sm == 0) {  // already numerically on the crossing
          position = mid;
          a = b = mid;
          break;
        }
        (sm == sign_a ? a : b) = mid;
        position = 0.5 * (a + b);
      }
      crossings.push_back({position, prev_x, x, true});
    }
    if (s != 0) {
      prev_sign = s;
      prev_x = x;
    }
  }
  return crossings;
}

std::optional<ZeroCrossing> find_zero_crossing(const StateSpec& base,
                                               std::string_view param, double lo,
                                               double hi, WitnessSelector sel,
                                               const CrossingOptions& options) {
  auto all = find_zero_crossings(base, param, lo, hi, sel, options);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace focknc
