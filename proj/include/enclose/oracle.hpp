// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "enclose/medium.hpp"
#include "enclose/scenario.hpp"
#include "enclose/vec3.hpp"

namespace enclose::oracle {

struct QuadratureSpec {
  int radial = 16;
  int polar = 16;
  int azimuth = 32;
  int levels = 3;  // order-doubling refinements
};

struct PotentialResult {
  Vec3 value;
  double rel_error = 0.0;  // from the last refinement step
  bool converged = false;
};

// Brute-force evaluation of the Laplace-domain free-space field: direct
// quadrature of the dyadic screened-Coulomb kernel over the source ball.
// Independent of the closed forms in freefield; used to validate them.
// Keep x away from a thin shell around the ball surface where the kernel is
// nearly singular at low orders.
PotentialResult volume_potential_oracle(const Vec3 &x, const SourceSpec &source,
                                        double tau, const MediumParams &medium,
                                        const QuadratureSpec &spec = {},
                                        double tol = 1e-9);

using FieldSampler = std::function<Vec3(const Vec3 &)>;

// Second-order central differences.
Vec3 fd_curl(const FieldSampler &field, const Vec3 &x, double h);
double fd_div(const FieldSampler &field, const Vec3 &x, double h);
Vec3 fd_curlcurl(const FieldSampler &field, const Vec3 &x, double h);

// Normal-incidence reflection coefficient of the impedance wall in the 1D
// transmission-line reduction, as a function of lambda*sqrt(mu/eps).
double reflection_1d(double lambda_norm);

}  // namespace enclose::oracle
