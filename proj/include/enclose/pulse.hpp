// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "enclose/errors.hpp"

namespace enclose {

enum class PulseKind { RampExp, Table };

// Driving waveform f(t) of the current source. Requirements: f(0) = 0 and f
// C^1 on the run interval. RampExp is amplitude*(t/t_c)*exp(1 - t/t_c)
// (peak value = amplitude at t = t_c, Laplace decay exponent gamma = 2).
// Table pulses are C^1 cubic-Hermite interpolants of their knots and raise a
// domain error outside the tabulated range.
class Pulse {
 public:
  static Pulse ramp_exp(double t_c, double amplitude);
  // Knots must start at t=0 with f=0 and have strictly increasing times.
  // gamma is the expected Laplace decay exponent used by admissibility checks.
  static Pulse table(std::vector<double> times, std::vector<double> values,
                     double gamma = 1.5);

  double operator()(double t) const { return eval(t); }
  double eval(double t) const;

  PulseKind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double ramp_time() const { return t_c_; }
  double decay_rate_gamma() const { return gamma_; }
  const std::vector<double> &table_times() const { return knot_t_; }
  const std::vector<double> &table_values() const { return knot_f_; }
  // End of tabulated support (RampExp: +inf).
  double domain_end() const;

 private:
  Pulse() = default;

  PulseKind kind_ = PulseKind::RampExp;
  double t_c_ = 1.0;
  double amplitude_ = 1.0;
  double gamma_ = 2.0;
  std::vector<double> knot_t_, knot_f_, knot_d_;  // Hermite data for Table
};

struct AdmissibilityReport {
  double min_weighted = 0.0;  // min over the grid of tau^gamma * |f_laplace|
  double floor = 0.0;
  bool pass = false;
};

// Finite-grid proxy for the liminf condition tau^gamma |f~(tau)| > 0: the
// pulse is sampled at step dt up to T and transformed with the same
// trapezoidal quadrature the indicator pipeline uses.
AdmissibilityReport pulse_admissibility(const Pulse &pulse, double gamma,
                                        const std::vector<double> &tau_grid,
                                        double T, double dt);

}  // namespace enclose
