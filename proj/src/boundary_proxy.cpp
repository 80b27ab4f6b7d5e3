// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/boundary_proxy.hpp"

#include <cmath>
#include <numbers>

#include "enclose/errors.hpp"
#include "enclose/free_field.hpp"
#include "enclose/quadrature.hpp"
#include "enclose/surface.hpp"

namespace enclose::freefield {

namespace {

enum class FormKind { CurlTrace, FieldTrace };

double integrate_sphere(FormKind kind, double tau, const Sphere &sphere,
                        const Obstacle &obstacle, const SourceSpec &source,
                        const MediumParams &medium, double f_tilde,
                        int n_polar, int n_azimuth) {
  const Vec3 p = source.center;
  const Vec3 a = source.direction;
  const double R = sphere.radius;
  Vec3 e3 = (p - sphere.center);
  double cp = e3.norm();
  if (!(cp > 0.0)) throw ConfigError("boundary form: source at sphere center");
  e3 = e3 / cp;
  Vec3 seed = std::abs(e3.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 e1 = seed.cross(e3).normalized();
  Vec3 e2 = e3.cross(e1);

  const double kappa = tau * medium.sqrt_mu_eps();
  const BallGain gain = ball_source_gain(tau, medium, source.eta);
  const double ft2 = f_tilde * f_tilde;
  const double sqme = medium.sqrt_mu_eps();

  const GaussRule &rule = gauss_legendre(n_polar);
  const double dphi = 2.0 * std::numbers::pi / n_azimuth;

  double acc = 0.0, comp = 0.0;  // Kahan over polar rows
  for (int it = 0; it < n_polar; ++it) {
    double ct = rule.nodes[it];
    double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    double wt = rule.weights[it] * dphi * R * R;  // dS weight
    double row = 0.0;
    for (int ip = 0; ip < n_azimuth; ++ip) {
      double phi = (ip + 0.5) * dphi;
      Vec3 nu = e1 * (st * std::cos(phi)) + e2 * (st * std::sin(phi)) + e3 * ct;
      Vec3 x = sphere.center + nu * R;
      double r = (x - p).norm();
      // K^2 f~^2 v^2 carried in log space; decays like exp(-2 kappa (r-eta)).
      double kv2 = std::exp(2.0 * gain.log_value - 2.0 * kappa * r) / (r * r);
      if (kv2 == 0.0) continue;
      double lambda = obstacle.lambda_at(x);
      SurfaceFrame fr = surface_frame(x, nu, p, a);
      SurfaceCoeffs sc = surface_coeffs(x, nu, p, a, lambda, tau, medium);
      Vec3 mix = fr.a_tan * sc.P - fr.radial_tan * sc.Q;
      double node;
      if (kind == FormKind::CurlTrace) {
        double co = 1.0 + 1.0 / (kappa * r);
        Vec3 curl_dir = fr.a_tan * fr.nu_dot_r - fr.radial_tan * fr.nu_dot_a;
        double integrand =
            -tau * tau * medium.mu * sqme * kv2 * ft2 * co * mix.dot(curl_dir);
        node = integrand / sc.c;
      } else {
        Vec3 field_dir = fr.a_tan * sc.A - fr.radial_tan * (sc.B * fr.a_dot_r);
        node = tau * medium.mu * kv2 * ft2 * mix.dot(field_dir);
      }
      row += node;
    }
    double term = wt * row;
    double y = term - comp;
    double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
  return acc / (medium.mu * medium.epsilon);
}

ProxyResult run_form(FormKind kind, double tau, const Obstacle &obstacle,
                     const SourceSpec &source, const MediumParams &medium,
                     double f_tilde, SphereQuadrature quad) {
  const auto *sphere = std::get_if<Sphere>(&obstacle.shape());
  if (!sphere)
    throw UnsupportedGeometryError(
        "boundary forms support sphere obstacles only");
  if (f_tilde == 0.0) return {0.0, 0.0, 0.0};
  ProxyResult res;
  res.value = integrate_sphere(kind, tau, *sphere, obstacle, source, medium,
                               f_tilde, quad.n_polar, quad.n_azimuth);
  res.refined = integrate_sphere(kind, tau, *sphere, obstacle, source, medium,
                                 f_tilde, 2 * quad.n_polar, 2 * quad.n_azimuth);
  double scale = std::max(std::abs(res.refined), 1e-300);
  res.rel_diff = std::abs(res.value - res.refined) / scale;
  return res;
}

}  // namespace

ProxyResult boundary_form_curl(double tau, const Obstacle &obstacle,
                               const SourceSpec &source, const MediumParams &medium,
                               double f_tilde, SphereQuadrature quad) {
  return run_form(FormKind::CurlTrace, tau, obstacle, source, medium, f_tilde, quad);
}

ProxyResult boundary_form_field(double tau, const Obstacle &obstacle,
                                const SourceSpec &source, const MediumParams &medium,
                                double f_tilde, SphereQuadrature quad) {
  return run_form(FormKind::FieldTrace, tau, obstacle, source, medium, f_tilde, quad);
}

}  // namespace enclose::freefield
