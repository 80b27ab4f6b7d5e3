// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/surface.hpp"

#include "enclose/errors.hpp"

namespace enclose::freefield {

SurfaceFrame surface_frame(const Vec3 &x, const Vec3 &nu, const Vec3 &p,
                           const Vec3 &a) {
  if (!nu.is_unit(1e-9)) throw ConfigError("surface_frame: nu must be a unit vector");
  SurfaceFrame f;
  f.x = x;
  f.nu = nu;
  Vec3 rhat = (x - p).normalized();
  f.nu_dot_a = nu.dot(a);
  f.nu_dot_r = nu.dot(rhat);
  f.a_dot_r = a.dot(rhat);
  // nu x (v x nu) = v - (nu.v) nu
  f.a_tan = a - nu * f.nu_dot_a;
  f.radial_tan = rhat - nu * f.nu_dot_r;
  return f;
}

SurfaceCoeffs surface_coeffs(const Vec3 &x, const Vec3 &nu, const Vec3 &p,
                             const Vec3 &a, double lambda_at_x, double tau,
                             const MediumParams &medium) {
  if (!(lambda_at_x > 0.0))
    throw ConfigError("surface_coeffs: lambda must be positive here");
  if (!(tau > 0.0)) throw ConfigError("surface_coeffs: tau must be positive");
  double kappa = tau * medium.sqrt_mu_eps();
  double r = (x - p).norm();
  Vec3 rhat = (x - p) / r;
  double inv_kr = 1.0 / (kappa * r);
  double corr = inv_kr * (1.0 + inv_kr);  // (1/kappa)(1/r + 1/(kappa r^2))
  SurfaceCoeffs c;
  c.A = 1.0 + corr;
  c.B = 1.0 + 3.0 * corr;
  double thr = medium.impedance_threshold();
  double co = 1.0 + inv_kr;
  c.P = lambda_at_x * c.A + thr * co * nu.dot(rhat);
  c.Q = lambda_at_x * c.B * a.dot(rhat) + thr * co * nu.dot(a);
  c.c = tau * medium.mu * lambda_at_x;
  return c;
}

}  // namespace enclose::freefield
