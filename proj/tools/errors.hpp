// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace focknc::cli {

// Exit-code mapping lives in main(): 0 ok, 2 usage (std::invalid_argument and
// command-line parse failures), 3 numeric (any other exception), 4 I/O
// (IoError), 5 reference-value mismatch (MismatchError).

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace focknc::cli
