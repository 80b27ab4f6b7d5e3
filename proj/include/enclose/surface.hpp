// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "enclose/medium.hpp"
#include "enclose/vec3.hpp"

namespace enclose::freefield {

// Tangential frame at a surface point: projections of the source direction
// and of the source-to-point direction onto the tangent plane.
struct SurfaceFrame {
  Vec3 x;
  Vec3 nu;          // outward unit normal
  Vec3 a_tan;       // nu x (a x nu)
  Vec3 radial_tan;  // nu x (r^ x nu), r^ = (x - p)/|x - p|
  double nu_dot_a = 0.0;
  double nu_dot_r = 0.0;
  double a_dot_r = 0.0;
};

SurfaceFrame surface_frame(const Vec3 &x, const Vec3 &nu, const Vec3 &p,
                           const Vec3 &a);

// Scalar coefficients of the boundary forms. A and B are the radial
// correction factors of the dipole kernel (-> 1 as tau grows); P and Q mix
// the impedance with the incidence geometry; c = tau*mu*lambda.
struct SurfaceCoeffs {
  double A = 0.0;
  double B = 0.0;
  double P = 0.0;
  double Q = 0.0;
  double c = 0.0;
};

SurfaceCoeffs surface_coeffs(const Vec3 &x, const Vec3 &nu, const Vec3 &p,
                             const Vec3 &a, double lambda_at_x, double tau,
                             const MediumParams &medium);

}  // namespace enclose::freefield
