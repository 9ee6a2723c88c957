// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Higher-order nonclassicality witnesses:
//
//   hoa_d(l)     d(l)   = <N^(l+1)> - <N>^(l+1)          (antibunching, < 0)
//   hosps_dh(l)  d_h(l) = <(dN)^(l+1)> - <(dN)^(l+1)>_Poisson(same mean)
//                                                        (sub-Poissonian, < 0)
//   hos_shm(n)   S(n)   = (<(dX)^n> - b_n) / b_n, n even (Hong-Mandel
//                         squeezing, < 0), with b_n the coherent-state
//                         boundary moment
//
// plus the Hong-Mandel central moment itself, the Poisson reference moment,
// and a zero-crossing search over a state-family parameter.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "focknc/fock_state.hpp"
#include "focknc/moments.hpp"
#include "focknc/states.hpp"

namespace focknc {

// d(l); negative values witness (l+1)-fold antibunching. l >= 1.
double hoa_d(const FockState& state, std::uint32_t l,
             std::uint32_t max_order = default_max_order);

// d_h(l); negative values witness (l+1)-order sub-Poissonian statistics.
// Evaluated through the Stirling-number double sum over factorial moments;
// the direct central-moment difference is kept as a test-side oracle. l >= 1.
double hosps_dh(const FockState& state, std::uint32_t l,
                std::uint32_t max_order = default_max_order);

// Hong-Mandel <(X - <X>)^n> for even n, from the triple sum over
// normally-ordered moments (binomial expansion + Wick pairings).
double hos_central_moment(const FockState& state, std::uint32_t n,
                          std::uint32_t max_order = default_max_order);

// Reference moment the Hong-Mandel witness normalizes against.
enum class ShmNormalization {
  gaussian,        // (n-1)!! (1/2)^{n/2}: the coherent/Gaussian boundary
  variance_power,  // (1/2)^{n/2}: the bare vacuum-variance power
};

double hos_shm(const FockState& state, std::uint32_t n,
               ShmNormalization norm = ShmNormalization::gaussian,
               std::uint32_t max_order = default_max_order);

// n-th central moment of a Poisson law with the given mean, by brute-force
// summation over the mass function (tail below 1e-14 by construction).
double poisson_central_moment(double mean, std::uint32_t n);

struct WitnessSelector {
  enum class Kind { hoa, hosps, hos } kind;
  std::uint32_t order;
};

double evaluate_witness(const FockState& state, WitnessSelector sel,
                        ShmNormalization norm = ShmNormalization::gaussian,
                        std::uint32_t max_order = default_max_order);

// One state's witness values plus the metadata needed to reproduce them.
struct WitnessReport {
  std::string state_label;
  double truncation_epsilon = 0.0;
  std::uint32_t max_order = default_max_order;
  std::map<std::uint32_t, double> hoa;                // l -> d(l)
  std::map<std::uint32_t, double> hosps;              // l -> d_h(l)
  std::map<std::uint32_t, double> hos;                // n -> S_HM(n)
  std::map<std::uint32_t, double> central_x_moments;  // n -> <(dX)^n>
};

WitnessReport witness_report(const FockState& state,
                             const std::vector<std::uint32_t>& hoa_orders,
                             const std::vector<std::uint32_t>& hosps_orders,
                             const std::vector<std::uint32_t>& hos_orders,
                             ShmNormalization norm = ShmNormalization::gaussian,
                             std::uint32_t max_order = default_max_order);

// --- zero crossings ---

struct ZeroCrossing {
  double position;    // bisected position (continuous) or bracket midpoint
  double bracket_lo;  // grid values with opposite witness signs
  double bracket_hi;
  bool refined;       // true when bisection ran (continuous parameter)
};

struct CrossingOptions {
  std::uint32_t grid_points = 241;   // scan resolution for real parameters
  double position_tolerance = 1e-4;  // bisection stop width
  double zero_tolerance = 1e-9;      // |value| below this counts as zero, not a sign change
  bool force_integer_grid = false;   // scan integers even when continuation exists
  ShmNormalization norm = ShmNormalization::gaussian;
  std::uint32_t max_order = default_max_order;
};

// Scans witness(param) over [lo, hi] for sign changes. Real parameters (and
// integer parameters with a continuous extension, i.e. GBS N) are refined by
// bisection; other integer parameters are scanned on the integer grid and
// reported as unrefined unit brackets.
std::vector<ZeroCrossing> find_zero_crossings(const StateSpec& base,
                                              std::string_view param, double lo,
                                              double hi, WitnessSelector sel,
                                              const CrossingOptions& options = {});

// First crossing in [lo, hi], if any.
std::optional<ZeroCrossing> find_zero_crossing(const StateSpec& base,
                                               std::string_view param, double lo,
                                               double hi, WitnessSelector sel,
                                               const CrossingOptions& options = {});

}  // namespace focknc
