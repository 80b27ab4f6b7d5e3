// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "enclose/medium.hpp"
#include "enclose/obstacle.hpp"
#include "enclose/scenario.hpp"

namespace enclose::freefield {

struct SphereQuadrature {
  int n_polar = 32;    // Gauss-Legendre in cos(theta)
  int n_azimuth = 64;  // uniform in phi
};

struct ProxyResult {
  double value = 0.0;
  double refined = 0.0;   // doubled-order value
  double rel_diff = 0.0;  // self-consistency estimate
};

// Surface integrals over the obstacle boundary of the free-field boundary
// forms, used as sign diagnostics for the classifier dichotomy. The "curl"
// form pairs the impedance combination against the tangential curl trace and
// carries a 1/c weight; the "field" form pairs it against the tangential
// field trace. Sphere obstacles only (the quadrature grid is built on the
// sphere parameterization, polar axis toward the source).
ProxyResult boundary_form_curl(double tau, const Obstacle &obstacle,
                               const SourceSpec &source, const MediumParams &medium,
                               double f_tilde, SphereQuadrature quad = {});

ProxyResult boundary_form_field(double tau, const Obstacle &obstacle,
                                const SourceSpec &source, const MediumParams &medium,
                                double f_tilde, SphereQuadrature quad = {});

}  // namespace enclose::freefield
