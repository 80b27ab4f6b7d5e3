// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/free_field.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "enclose/errors.hpp"
#include "enclose/quadrature.hpp"

namespace enclose::freefield {

namespace {
constexpr double kPi = std::numbers::pi;
}

double sphere_form_factor(double xi) {
  if (!(xi >= 0.0)) throw ConfigError("sphere_form_factor: xi must be >= 0");
  if (xi < 1e-2) {
    double x2 = xi * xi;
    return xi * x2 * (1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 / 840.0));
  }
  return xi * std::cosh(xi) - std::sinh(xi);
}

double log_sphere_form_factor(double xi) {
  if (xi < 300.0) return std::log(sphere_form_factor(xi));
  // xi cosh - sinh = ((xi-1)e^xi + (xi+1)e^-xi)/2; the second term is
  // negligible at this size.
  return xi + std::log(0.5 * (xi - 1.0));
}

BallGain ball_source_gain(double tau, const MediumParams &medium, double eta) {
  if (!(tau > 0.0) || !(eta > 0.0))
    throw ConfigError("ball_source_gain: tau and eta must be positive");
  double kappa = tau * medium.sqrt_mu_eps();
  double xi = kappa * eta;
  BallGain g;
  g.log_value = std::log(medium.mu * tau) + log_sphere_form_factor(xi) -
                3.0 * std::log(kappa);
  g.value = xi < 300.0
                ? medium.mu * tau * sphere_form_factor(xi) / (kappa * kappa * kappa)
                : std::exp(g.log_value);
  g.high_tau_asymptote = eta * std::exp(xi) / (2.0 * medium.epsilon * tau);
  return g;
}

namespace {

// Radial profile of the potential and its first two derivatives. Two
// branches of one smooth function: exterior is the screened point form
// scaled by the ball form factor, interior the complementary sinh form.
struct RadialProfile {
  double u, du, d2u;
};

RadialProfile radial_profile(double r, double kappa, double eta) {
  if (r > eta) {
    double c = sphere_form_factor(kappa * eta) / (kappa * kappa * kappa);
    double v = std::exp(-kappa * r) / r;
    double dv = -(kappa + 1.0 / r) * v;
    double d2v = (kappa * kappa + 2.0 * kappa / r + 2.0 / (r * r)) * v;
    return {c * v, c * dv, c * d2v};
  }
  double ci = (1.0 + kappa * eta) * std::exp(-kappa * eta) / (kappa * kappa);
  double xi = kappa * r;
  double w, dw, d2w;  // sinh(xi)/xi and derivatives in r
  if (xi < 1e-2) {
    double x2 = xi * xi;
    w = 1.0 + x2 * (1.0 / 6.0 + x2 / 120.0);
    // dw/dr = kappa * form(xi)/xi^2, with form(xi)/xi^2 ~ xi/3 + xi^3/30
    dw = kappa * xi * (1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 / 840.0));
    d2w = kappa * kappa *
          (1.0 / 3.0 + x2 * (0.1 + x2 * (5.0 / 840.0)));  // sinh/xi - 2 form/xi^3
  } else {
    double sh = std::sinh(xi), ch = std::cosh(xi);
    w = sh / xi;
    dw = kappa * (xi * ch - sh) / (xi * xi);
    d2w = kappa * kappa * (sh / xi - 2.0 * (xi * ch - sh) / (xi * xi * xi));
  }
  return {1.0 / (kappa * kappa) - ci * w, -ci * dw, -ci * d2w};
}

FreeFieldEval eval_from_profile(const Vec3 &x, const SourceSpec &source,
                                double tau, const MediumParams &medium,
                                double f_tilde, FieldRegion region) {
  double kappa = tau * medium.sqrt_mu_eps();
  Vec3 d = x - source.center;
  double r = d.norm();
  const Vec3 &a = source.direction;
  double scale = medium.mu * tau * f_tilde;
  FreeFieldEval out;
  out.region = region;
  if (r < 1e-14) {
    // On-axis limit at the center: value parallel to a.
    RadialProfile p = radial_profile(1e-14, kappa, source.eta);
    double coef_a = p.u - p.d2u / (kappa * kappa);  // du/r -> d2u at r=0
    out.value = a * (scale * coef_a);
    out.curl = Vec3{};
    return out;
  }
  Vec3 rhat = d / r;
  RadialProfile p = radial_profile(r, kappa, source.eta);
  double k2 = kappa * kappa;
  double coef_a = p.u - p.du / (k2 * r);
  double coef_rr = -(p.d2u - p.du / r) / k2;
  out.value = (a * coef_a + rhat * (coef_rr * a.dot(rhat))) * scale;
  out.curl = rhat.cross(a) * (scale * p.du);
  return out;
}

}  // namespace

FreeFieldEval free_field_exterior(const Vec3 &x, const SourceSpec &source,
                                  double tau, const MediumParams &medium,
                                  double f_tilde) {
  double r = (x - source.center).norm();
  if (!(r > source.eta))
    throw ConfigError("free_field_exterior: point inside the source ball; "
                      "use free_field_at");
  return eval_from_profile(x, source, tau, medium, f_tilde,
                           FieldRegion::ExteriorOfB);
}

FreeFieldEval free_field_at(const Vec3 &x, const SourceSpec &source, double tau,
                            const MediumParams &medium, double f_tilde) {
  double r = (x - source.center).norm();
  return eval_from_profile(x, source, tau, medium, f_tilde,
                           r > source.eta ? FieldRegion::ExteriorOfB
                                          : FieldRegion::InteriorOfB);
}

Vec3 free_field_ball_integral(const SourceSpec &source, double tau,
                              const MediumParams &medium, double f_tilde) {
  // Radial reduction: int_B [coef_a + coef_rr/3] 4 pi r^2 dr along a.
  // 64-node Gauss-Legendre on [0, eta]; the integrand is analytic.
  const GaussRule &rule = gauss_legendre(64);
  double kappa = tau * medium.sqrt_mu_eps();
  double k2 = kappa * kappa;
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double r = 0.5 * source.eta * (rule.nodes[i] + 1.0);
    double w = 0.5 * source.eta * rule.weights[i];
    RadialProfile p = radial_profile(r, kappa, source.eta);
    double coef_a = p.u - p.du / (k2 * r);
    double coef_rr = -(p.d2u - p.du / r) / k2;
    acc += w * (coef_a + coef_rr / 3.0) * r * r;
  }
  double scale = medium.mu * tau * f_tilde * 4.0 * kPi;
  return source.direction * (scale * acc);
}

}  // namespace enclose::freefield
