// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "enclose/laplace.hpp"

namespace enclose {

Pulse Pulse::ramp_exp(double t_c, double amplitude) {
  if (!(t_c > 0.0)) throw ConfigError("pulse: ramp time t_c must be positive");
  Pulse p;
  p.kind_ = PulseKind::RampExp;
  p.t_c_ = t_c;
  p.amplitude_ = amplitude;
  p.gamma_ = 2.0;
  return p;
}

Pulse Pulse::table(std::vector<double> times, std::vector<double> values,
                   double gamma) {
  if (times.size() != values.size() || times.size() < 2)
    throw ConfigError("pulse: table needs matching times/values, >= 2 knots");
  if (times.front() != 0.0 || values.front() != 0.0)
    throw ConfigError("pulse: table must start at t=0 with f(0)=0");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw ConfigError("pulse: table times must be strictly increasing");

  Pulse p;
  p.kind_ = PulseKind::Table;
  p.gamma_ = gamma;
  p.knot_t_ = std::move(times);
  p.knot_f_ = std::move(values);
  // Knot slopes from three-point differences; one-sided at the ends. The
  // Hermite pieces then share one-sided derivatives at every knot (C^1).
  const auto &t = p.knot_t_;
  const auto &f = p.knot_f_;
  std::size_t m = t.size();
  p.knot_d_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0) {
      p.knot_d_[i] = (f[1] - f[0]) / (t[1] - t[0]);
    } else if (i + 1 == m) {
      p.knot_d_[i] = (f[m - 1] - f[m - 2]) / (t[m - 1] - t[m - 2]);
    } else {
      double hl = t[i] - t[i - 1], hr = t[i + 1] - t[i];
      double sl = (f[i] - f[i - 1]) / hl, sr = (f[i + 1] - f[i]) / hr;
      p.knot_d_[i] = (hr * sl + hl * sr) / (hl + hr);
    }
  }
  double amp = 0.0;
  for (double v : f) amp = std::max(amp, std::abs(v));
  p.amplitude_ = amp;
  return p;
}

double Pulse::eval(double t) const {
  if (!(t >= 0.0)) throw ConfigError("pulse: t must be nonnegative");
  if (kind_ == PulseKind::RampExp) {
    if (t == 0.0) return 0.0;
    return amplitude_ * (t / t_c_) * std::exp(1.0 - t / t_c_);
  }
  if (t > knot_t_.back() * (1.0 + 1e-12))
    throw ConfigError("pulse: table evaluated outside its domain");
  if (t >= knot_t_.back()) return knot_f_.back();
  auto it = std::upper_bound(knot_t_.begin(), knot_t_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - knot_t_.begin());
  if (i == 0) i = 1;
  double t0 = knot_t_[i - 1], t1 = knot_t_[i];
  double h = t1 - t0, u = (t - t0) / h;
  double f0 = knot_f_[i - 1], f1 = knot_f_[i];
  double d0 = knot_d_[i - 1], d1 = knot_d_[i];
  double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * f0 + (u3 - 2 * u2 + u) * h * d0 +
         (-2 * u3 + 3 * u2) * f1 + (u3 - u2) * h * d1;
}

double Pulse::domain_end() const {
  return kind_ == PulseKind::RampExp ? std::numeric_limits<double>::infinity()
                                     : knot_t_.back();
}

AdmissibilityReport pulse_admissibility(const Pulse &pulse, double gamma,
                                        const std::vector<double> &tau_grid,
                                        double T, double dt) {
  if (!(gamma >= 1.5))
    throw ConfigError("pulse_admissibility: gamma must be >= 3/2");
  if (tau_grid.empty())
    throw ConfigError("pulse_admissibility: empty tau grid");
  auto n = static_cast<std::size_t>(std::floor(T / dt + 1e-9));
  std::vector<double> samples(n + 1);
  double t_end = pulse.domain_end();
  for (std::size_t i = 0; i <= n; ++i) {
    double t = std::min(static_cast<double>(i) * dt, t_end);
    samples[i] = pulse.eval(t);
  }
  AdmissibilityReport rep;
  rep.floor = 1e-12 * std::abs(pulse.amplitude());
  rep.min_weighted = std::numeric_limits<double>::infinity();
  for (double tau : tau_grid) {
    double ft = laplace_series(std::span<const double>(samples), dt, tau, T).value;
    rep.min_weighted = std::min(rep.min_weighted, std::pow(tau, gamma) * std::abs(ft));
  }
  rep.pass = rep.min_weighted > rep.floor;
  return rep;
}

}  // namespace enclose
