// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// The CLI's canonical state grammar:
//
//   spec    := family ":" pair ("," pair)*
//   pair    := key "=" value
//   value   := real | complex          complex := real [("+"|"-") real] "i"
//
// with keys exactly matching the family's parameter names, all required:
//
//   gbs:alpha=5,beta=30,N=30   nbs:eta=0.6,M=20    pacs:alpha=0.4,m=3
//   hs:L=40,M=10,eta=0.3       coherent:alpha=1    fock:n=4
//   binomial:p=0.5,M=10
//
// Parse failures throw std::invalid_argument with a diagnostic.
#pragma once

#include <complex>
#include <string_view>

#include "focknc/states.hpp"

namespace focknc::cli {

StateSpec parse_state_spec(std::string_view text);

std::complex<double> parse_complex(std::string_view text);
double parse_real(std::string_view text);

}  // namespace focknc::cli
