// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace enclose {

// Error classes map 1:1 onto CLI exit codes, see tools/enclose_main.cpp.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runtime failure of the time stepper (NaN fields, blow-up).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace enclose
