// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Figure presets: canned sweep configurations read from a plain-text file of
// the form
//
//   # comment
//   [name]
//   state     = gbs:alpha=2,beta=2,N=13
//   vary      = N
//   from      = 2
//   to        = 30
//   steps     = 281               # optional; omit for the sweep default
//   witnesses = hoa:5 hosps:5     # space-separated witness:order tokens
//
// The repo ships presets/figures.cfg with one section per figure.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace focknc::cli {

struct Preset {
  std::string state;
  std::string vary;
  double from = 0.0;
  double to = 0.0;
  std::uint32_t steps = 0;  // 0: leave the sweep default in place
  std::vector<std::string> witnesses;
};

// Reads every preset section from `path`. Unreadable file -> IoError;
// malformed content -> std::invalid_argument.
std::map<std::string, Preset> load_presets(const std::string& path);

// Expands "hoa:5"-style tokens into the per-witness order lists.
void apply_witness_tokens(const std::vector<std::string>& tokens,
                          std::vector<std::uint32_t>& hoa,
                          std::vector<std::uint32_t>& hosps,
                          std::vector<std::uint32_t>& hos);

}  // namespace focknc::cli
