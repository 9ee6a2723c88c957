// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "focknc/states.hpp"

namespace focknc::cli {

// Built-in reference values used by the `table1` subcommand: four
// beta-binomial (gbs) benchmark states with published witness values.  Each
// entry records the value exactly as printed in its original tabulation,
// including how many significant digits the printing kept.  Printed values
// are truncated, not rounded, so the comparison below accepts either a small
// relative deviation or an exact truncation match.
struct ReferenceEntry {
  const char* witness;  // "hoa", "hosps" or "hos"
  std::uint32_t order;
  double printed;      // canonical interpretation of the printed value
  int sig_digits;      // significant digits in the printing
  const char* typo;    // original garbled text when the printing is known bad
};

struct ReferenceRow {
  GbsParams params;
  std::array<ReferenceEntry, 6> entries;
};

const std::array<ReferenceRow, 4>& reference_rows();

// Relative tolerance granted for a value printed with the given number of
// significant digits: 1% at three or more, 2% at two, 5% at one.
double tolerance_for(int sig_digits);

// True when `computed`, truncated toward zero at `sig_digits` significant
// digits, reproduces `printed` exactly.
bool truncates_to_printed(double computed, double printed, int sig_digits);

struct ReferenceComparison {
  double computed = 0.0;
  double rel_deviation = 0.0;
  bool within_tolerance = false;
  bool truncation_match = false;
  bool pass = false;
};

ReferenceComparison compare_reference(double computed, const ReferenceEntry& entry);

}  // namespace focknc::cli
