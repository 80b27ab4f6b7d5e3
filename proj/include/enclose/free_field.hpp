// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "enclose/medium.hpp"
#include "enclose/scenario.hpp"
#include "enclose/vec3.hpp"

namespace enclose::freefield {

// The Laplace-domain free-space response of the ball source solves
//   (1/(mu eps)) curl curl V + tau^2 V = (tau/eps) f~(tau) chi_B(x) a
// and equals the dyadic screened-Coulomb potential of the right-hand side.
// Everything here is the analytic evaluation of that potential; the oracle
// module provides an independent quadrature route for cross-checking.

// Form factor of the uniform ball for the screened-Coulomb kernel:
// xi*cosh(xi) - sinh(xi), with a series branch below xi = 1e-2 to avoid
// cancellation.
double sphere_form_factor(double xi);
double log_sphere_form_factor(double xi);

struct BallGain {
  double value = 0.0;      // mu*tau*form_factor(kappa*eta)/kappa^3
  double log_value = 0.0;  // always valid, also when value overflows
  double high_tau_asymptote = 0.0;  // eta*exp(kappa*eta)/(2*eps*tau)
};

// Overall amplitude of the exterior field, kappa = tau*sqrt(mu*eps).
BallGain ball_source_gain(double tau, const MediumParams &medium, double eta);

enum class FieldRegion { ExteriorOfB, InteriorOfB };

struct FreeFieldEval {
  Vec3 value;
  Vec3 curl;
  FieldRegion region = FieldRegion::ExteriorOfB;
};

// Closed exterior form: gain * f~ * v(r) * (A a - B (a.r^)r^) with
// v = exp(-kappa r)/r; requires |x - p| > eta.
FreeFieldEval free_field_exterior(const Vec3 &x, const SourceSpec &source,
                                  double tau, const MediumParams &medium,
                                  double f_tilde);

// Analytic evaluation of the volume potential at any x (both regions); on
// the exterior it reproduces free_field_exterior identically.
FreeFieldEval free_field_at(const Vec3 &x, const SourceSpec &source, double tau,
                            const MediumParams &medium, double f_tilde);

// integral over B of V dx; parallel to the source direction by symmetry.
Vec3 free_field_ball_integral(const SourceSpec &source, double tau,
                              const MediumParams &medium, double f_tilde);

}  // namespace enclose::freefield
