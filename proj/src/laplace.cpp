// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/laplace.hpp"

#include <cmath>

namespace enclose {

namespace {

// Number of intervals covered by [0, T], truncating T down to a sample
// boundary (with a small tolerance so T = n*dt lands on n).
std::size_t truncated_intervals(std::size_t n_samples, double dt, double T) {
  if (n_samples < 2) throw ConfigError("laplace_series: empty series");
  if (!(dt > 0.0)) throw ConfigError("laplace_series: dt must be positive");
  if (!(T >= 0.0)) throw ConfigError("laplace_series: T must be nonnegative");
  double nf = std::floor(T / dt + 1e-9);
  auto n = static_cast<std::size_t>(nf);
  if (n + 1 > n_samples)
    throw ConfigError("laplace_series: T exceeds recorded duration");
  return n;
}

}  // namespace

LaplaceResult laplace_series(std::span<const double> values, double dt,
                             double tau, double T) {
  if (!(tau > 0.0)) throw ConfigError("laplace_series: tau must be positive");
  std::size_t n = truncated_intervals(values.size(), dt, T);
  // exp(-tau t_i) built multiplicatively; relative drift over n steps is
  // n*eps, negligible against the O(dt^2) quadrature error.
  const double step = std::exp(-tau * dt);
  double w = 1.0;
  double acc = 0.0, comp = 0.0;  // Kahan
  for (std::size_t i = 0; i <= n; ++i) {
    double coeff = (i == 0 || i == n) ? 0.5 : 1.0;
    double term = coeff * w * values[i];
    double y = term - comp;
    double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    w *= step;
  }
  return {acc * dt, tau * dt > 0.5};
}

LaplaceResultVec3 laplace_series(std::span<const Vec3> values, double dt,
                                 double tau, double T) {
  if (!(tau > 0.0)) throw ConfigError("laplace_series: tau must be positive");
  std::size_t n = truncated_intervals(values.size(), dt, T);
  const double step = std::exp(-tau * dt);
  double w = 1.0;
  Vec3 acc, comp;
  for (std::size_t i = 0; i <= n; ++i) {
    double coeff = (i == 0 || i == n) ? 0.5 : 1.0;
    Vec3 term = values[i] * (coeff * w);
    Vec3 y = term - comp;
    Vec3 t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    w *= step;
  }
  return {acc * dt, tau * dt > 0.5};
}

}  // namespace enclose
