// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "enclose/errors.hpp"

namespace enclose {

// Homogeneous background medium. Wave speed is 1/sqrt(mu*eps); the matched
// surface impedance sqrt(eps/mu) separates the two classifier regimes.
struct MediumParams {
  double epsilon = 1.0;
  double mu = 1.0;

  MediumParams() = default;
  MediumParams(double eps_, double mu_) : epsilon(eps_), mu(mu_) {
    if (!(epsilon > 0.0) || !(mu > 0.0))
      throw ConfigError("medium: epsilon and mu must be positive");
  }

  double sqrt_mu_eps() const { return std::sqrt(mu * epsilon); }
  double wave_speed() const { return 1.0 / sqrt_mu_eps(); }
  double impedance_threshold() const { return std::sqrt(epsilon / mu); }
};

}  // namespace enclose
