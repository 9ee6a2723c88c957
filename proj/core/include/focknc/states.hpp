// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Constructors for the photon-number distributions under study -- the four
// intermediate state families (generalized binomial, negative binomial,
// photon-added coherent, hypergeometric) plus the coherent, Fock and binomial
// reference states -- together with a small parameter-reflection layer used
// by sweeps and zero-crossing searches, and closed-form moment series for the
// families that admit them.
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "focknc/fock_state.hpp"
#include "focknc/moments.hpp"

namespace focknc {

// Generalized binomial state: |C_n|^2 = C(N,n) B(n+alpha+1, N-n+beta+1) /
// B(alpha+1, beta+1), n = 0..N. Interpolates binomial -> negative-binomial-
// like laws as (alpha, beta) vary; alpha = beta = 0 is the flat distribution.
// Non-integer N is supported as a continuous extension (support 0..ceil(N),
// gamma-continued binomial weight) so zero crossings in N can be bisected;
// it agrees exactly with the integer state at integer N.
struct GbsParams {
  double alpha;
  double beta;
  double big_n;  // size parameter N >= 0
};

// Negative binomial state: C_n = [C(n, M) eta^{M+1} (1-eta)^{n-M}]^{1/2} for
// n >= M; eta = 1 degenerates to the Fock state |M>.
struct NbsParams {
  double eta;
  std::uint32_t m_quanta;  // M
};

// Photon-added coherent state a^dag^m |alpha>, amplitudes on |m+n'> only.
struct PacsParams {
  std::complex<double> alpha;
  std::uint32_t added;  // m
};

// Hypergeometric state: |C_n|^2 = C(L eta, n) C(L(1-eta), M-n) / C(L, M),
// n = 0..M, with real L >= max(M/eta, M/(1-eta)).
struct HsParams {
  double big_l;
  std::uint32_t m_quanta;  // M
  double eta;
};

struct CoherentParams {
  std::complex<double> alpha;
};

struct FockParams {
  std::uint32_t n;
};

// Binomial state: C_n = [C(M,n) p^n (1-p)^{M-n}]^{1/2}, n = 0..M.
struct BinomialParams {
  double p;
  std::uint32_t m_quanta;  // M
};

struct StateSpec {
  std::variant<GbsParams, NbsParams, PacsParams, HsParams, CoherentParams,
               FockParams, BinomialParams>
      params;
  double truncation_epsilon = FockState::default_truncation_epsilon;

  std::string_view family() const;  // "gbs", "nbs", "pacs", "hs", ...
  std::string label() const;        // canonical "family:key=value,..." text
};

FockState make_gbs(double alpha, double beta, double big_n);
FockState make_nbs(double eta, std::uint32_t m_quanta,
                   double truncation_epsilon = FockState::default_truncation_epsilon);
FockState make_pacs(std::complex<double> alpha, std::uint32_t added,
                    double truncation_epsilon = FockState::default_truncation_epsilon);
FockState make_hs(double big_l, std::uint32_t m_quanta, double eta);
FockState make_coherent(std::complex<double> alpha,
                        double truncation_epsilon = FockState::default_truncation_epsilon);
FockState make_fock(std::uint32_t n);
FockState make_binomial(double p, std::uint32_t m_quanta);

// Dispatch on the spec's family; parameter validation failures raise
// std::invalid_argument.
FockState make_state(const StateSpec& spec);

// --- parameter reflection (sweep / zero-crossing plumbing) ---

// Parameter names of the spec's family, in canonical order.
std::vector<std::string> parameter_names(const StateSpec& spec);

// Reads a parameter by name; complex alpha is reported as its real part
// (sweeps treat alpha as real, matching every use in the source material).
double get_parameter(const StateSpec& spec, std::string_view name);

// Returns a copy with the named parameter replaced. Integer parameters
// require an integer value unless the family supports a continuous extension
// (GBS in N). Unknown names or invalid values raise std::invalid_argument.
StateSpec with_parameter(StateSpec spec, std::string_view name, double value);

// True when the parameter is integer-valued (photon counts, added quanta).
bool parameter_is_integer(const StateSpec& spec, std::string_view name);

// True when a non-integer value of an integer parameter still defines a
// state via a continuous extension (GBS N only).
bool parameter_supports_continuation(const StateSpec& spec, std::string_view name);

// --- closed-form moment series ---

// <a^dag^k a^l> from the per-family closed-form series (negative binomial,
// photon-added coherent with real alpha, hypergeometric). The generic moment
// engine is authoritative; these series exist as independent cross-checks.
// The photon-added series is only structurally valid for k == l (its k != l
// cells are captured by a diagnostic, not trusted). Families without a
// closed form raise std::invalid_argument.
double closed_form_moment(const StateSpec& spec, MomentKey key);
bool has_closed_form(const StateSpec& spec);

}  // namespace focknc
