// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "reference_table.hpp"

#include <cmath>
#include <cstdlib>

namespace focknc::cli {

const std::array<ReferenceRow, 4>& reference_rows() {
  static const std::array<ReferenceRow, 4> rows = {{
      {GbsParams{5.0, 30.0, 30.0},
       {{{"hoa", 3, 346.68, 5, nullptr},
         {"hoa", 5, 2.4e4, 2, nullptr},
         {"hosps", 3, 97.69, 4, nullptr},
         {"hosps", 5, 6.4e3, 2, nullptr},
         {"hos", 4, 1.18, 3, nullptr},
         {"hos", 6, 2.16, 3, nullptr}}}},
      {GbsParams{30.0, 5.0, 30.0},
       {{{"hoa", 3, -6.5e4, 2, nullptr},
         {"hoa", 5, -9e7, 1, nullptr},
         {"hosps", 3, -1.7e3, 2, nullptr},
         {"hosps", 5, -2.4e5, 2, nullptr},
         {"hos", 4, 39.54, 4, nullptr},
         {"hos", 6, 2724.10, 6, nullptr}}}},
      {GbsParams{5.0, 5.0, 5.0},
       {{{"hoa", 3, -27.98, 4, nullptr},
         {"hoa", 5, -244.14, 5, nullptr},
         {"hosps", 3, -14.96, 4, nullptr},
         {"hosps", 5, -361.0, 3, nullptr},
         {"hos", 4, 1.39, 3, nullptr},
         {"hos", 6, 20.03, 4, nullptr}}}},
      {GbsParams{30.0, 30.0, 30.0},
       {{{"hoa", 3, -5.57e3, 3, nullptr},
         {"hoa", 5, -3e6, 1, nullptr},
         // The original tabulation prints this entry garbled as "-3.46.43";
         // the stray dot makes -346.43 the only reading consistent with the
         // neighbouring digits.
         {"hosps", 3, -346.43, 5, "-3.46.43"},
         {"hosps", 5, -3.9e4, 2, nullptr},
         {"hos", 4, -0.47, 2, nullptr},
         {"hos", 6, -0.59, 2, nullptr}}}},
  }};
  return rows;
}

double tolerance_for(int sig_digits) {
  if (sig_digits >= 3) return 0.01;
  if (sig_digits == 2) return 0.02;
  return 0.05;
}

bool truncates_to_printed(double computed, double printed, int sig_digits) {
  if (computed == 0.0 || !std::isfinite(computed)) return computed == printed;
  const double mag = std::floor(std::log10(std::fabs(computed)));
  const double scale = std::pow(10.0, mag - sig_digits + 1);
  const double q = computed / scale;
  double t = std::trunc(q);
  // Relieve quotients that land a rounding error away from an integer.
  if (std::fabs(q - std::round(q)) <= 1e-9 * std::fabs(q)) t = std::round(q);
  return std::fabs(t * scale - printed) <=
         1e-9 * std::max(std::fabs(printed), 1.0);
}

ReferenceComparison compare_reference(double computed, const ReferenceEntry& entry) {
  ReferenceComparison cmp;
  cmp.computed = computed;
  cmp.rel_deviation = std::fabs(computed - entry.printed) /
                      std::max(std::fabs(entry.printed), 1e-300);
  cmp.within_tolerance = cmp.rel_deviation <= tolerance_for(entry.sig_digits);
  cmp.truncation_match =
      truncates_to_printed(computed, entry.printed, entry.sig_digits);
  cmp.pass = cmp.within_tolerance || cmp.truncation_match;
  return cmp;
}

}  // namespace focknc::cli
