// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Subcommand implementations. Options arrive fully resolved (preset merging
// happens in main); each run_* returns the process exit code on success and
// reports failures by exception -- see errors.hpp for the mapping.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "focknc/fock_state.hpp"
#include "focknc/moments.hpp"
#include "focknc/montecarlo.hpp"
#include "focknc/witnesses.hpp"

namespace focknc::cli {

struct WitnessOptions {
  std::string state;
  std::vector<std::uint32_t> hoa, hosps, hos;
  double trunc_eps = FockState::default_truncation_epsilon;
  std::uint32_t max_order = default_max_order;
  ShmNormalization norm = ShmNormalization::gaussian;
  std::string out;  // empty: standard output
};

struct SweepOptions {
  std::string state;
  std::string vary;
  double from = 0.0;
  double to = 0.0;
  std::uint32_t steps = 241;
  std::vector<std::uint32_t> hoa, hosps, hos;
  double trunc_eps = FockState::default_truncation_epsilon;
  std::uint32_t max_order = default_max_order;
  ShmNormalization norm = ShmNormalization::gaussian;
  std::string out;
};

struct Table1Options {
  double trunc_eps = FockState::default_truncation_epsilon;
  // When set, an entry passes only if its relative deviation is <= strict;
  // the printed-digits tolerance and truncation rules are bypassed.
  double strict = 0.0;
  bool strict_given = false;
  std::string out;  // optional CSV copy of the comparison
};

struct McOptions {
  std::string state;
  std::vector<std::uint32_t> hoa, hosps;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  std::uint32_t resamples = default_bootstrap_resamples;
  double trunc_eps = FockState::default_truncation_epsilon;
  std::string out;
};

struct DumpStateOptions {
  std::string state;
  double trunc_eps = FockState::default_truncation_epsilon;
  std::string out;
};

int run_witness(const WitnessOptions& opt);
int run_sweep(const SweepOptions& opt);
int run_table1(const Table1Options& opt);
int run_mc(const McOptions& opt);
int run_dump_state(const DumpStateOptions& opt);

}  // namespace focknc::cli
