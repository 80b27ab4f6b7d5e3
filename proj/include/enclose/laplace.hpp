// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "enclose/errors.hpp"
#include "enclose/vec3.hpp"

namespace enclose {

enum class SeriesLabel { WithObstacle, FreeSpace };

// Uniformly sampled history of the ball-averaged electric field,
// s(t) = integral over B of E(x,t) dx. times start at 0 and values[0] = 0
// (zero initial data).
struct TimeSeriesMoment {
  double dt = 0.0;
  std::vector<Vec3> values;
  SeriesLabel label = SeriesLabel::FreeSpace;

  std::size_t size() const { return values.size(); }
  double time(std::size_t i) const { return dt * static_cast<double>(i); }
  double duration() const {
    return values.empty() ? 0.0 : dt * static_cast<double>(values.size() - 1);
  }
};

struct LaplaceResult {
  double value = 0.0;
  bool under_resolved = false;  // tau*dt > 0.5
};

struct LaplaceResultVec3 {
  Vec3 value;
  bool under_resolved = false;
};

// Trapezoidal approximation of integral_0^T exp(-tau t) v(t) dt on a uniform
// grid; T is truncated down to a sample boundary. The same quadrature serves
// the pulse transform and the field moments so that the indicator is built
// from one consistent discretization.
LaplaceResult laplace_series(std::span<const double> values, double dt,
                             double tau, double T);
LaplaceResultVec3 laplace_series(std::span<const Vec3> values, double dt,
                                 double tau, double T);

}  // namespace enclose
