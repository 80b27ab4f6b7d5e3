// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/oracle.hpp"

#include <cmath>
#include <numbers>

#include "enclose/errors.hpp"
#include "enclose/quadrature.hpp"

namespace enclose::oracle {

namespace {

// Dyadic screened-Coulomb kernel applied to the unit source direction:
// G(z) a = Phi(s) [A(s) a - B(s) (a.z^) z^], Phi = exp(-kappa s)/(4 pi s),
// the pointwise analogue of the ball-mean coefficients.
Vec3 kernel_apply(const Vec3 &z, const Vec3 &a, double kappa) {
  double s = z.norm();
  double phi = std::exp(-kappa * s) / (4.0 * std::numbers::pi * s);
  double inv_ks = 1.0 / (kappa * s);
  double corr = inv_ks * (1.0 + inv_ks);
  double A = 1.0 + corr;
  double B = 1.0 + 3.0 * corr;
  Vec3 zhat = z / s;
  return (a * A - zhat * (B * a.dot(zhat))) * phi;
}

Vec3 integrate_ball(const Vec3 &x, const SourceSpec &source, double tau,
                    const MediumParams &medium, int nr, int nt, int np) {
  const double kappa = tau * medium.sqrt_mu_eps();
  const double eta = source.eta;
  // Polar axis toward the evaluation point so the kernel variation over the
  // ball is resolved along theta.
  Vec3 e3 = x - source.center;
  double d = e3.norm();
  e3 = d > 0 ? e3 / d : Vec3{0, 0, 1};
  Vec3 seed = std::abs(e3.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 e1 = seed.cross(e3).normalized();
  Vec3 e2 = e3.cross(e1);

  const GaussRule &rr = gauss_legendre(nr);
  const GaussRule &rt = gauss_legendre(nt);
  const double dphi = 2.0 * std::numbers::pi / np;
  Vec3 acc;
  for (int ir = 0; ir < nr; ++ir) {
    double r = 0.5 * eta * (rr.nodes[ir] + 1.0);
    double wr = 0.5 * eta * rr.weights[ir] * r * r;
    for (int it = 0; it < nt; ++it) {
      double ct = rt.nodes[it];
      double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      double w = wr * rt.weights[it] * dphi;
      for (int ip = 0; ip < np; ++ip) {
        double phi = (ip + 0.5) * dphi;
        Vec3 y = source.center +
                 (e1 * (st * std::cos(phi)) + e2 * (st * std::sin(phi)) + e3 * ct) * r;
        acc += kernel_apply(x - y, source.direction, kappa) * w;
      }
    }
  }
  return acc;
}

}  // namespace

PotentialResult volume_potential_oracle(const Vec3 &x, const SourceSpec &source,
                                        double tau, const MediumParams &medium,
                                        const QuadratureSpec &spec, double tol) {
  if (spec.radial < 4 || spec.polar < 4 || spec.azimuth < 4)
    throw ConfigError("volume_potential_oracle: orders must be >= 4");
  double scale = medium.mu * tau;  // right-hand side strength, times f~ below
  PotentialResult res;
  Vec3 prev;
  int nr = spec.radial, nt = spec.polar, np = spec.azimuth;
  for (int level = 0; level < spec.levels; ++level) {
    Vec3 cur = integrate_ball(x, source, tau, medium, nr, nt, np) * scale;
    if (level > 0) {
      double denom = std::max(cur.norm(), 1e-300);
      res.rel_error = (cur - prev).norm() / denom;
    }
    prev = cur;
    nr *= 2;
    nt *= 2;
    np *= 2;
  }
  res.value = prev;
  res.converged = res.rel_error <= tol;
  return res;
}

Vec3 fd_curl(const FieldSampler &field, const Vec3 &x, double h) {
  auto d = [&](int comp, const Vec3 &dir) {
    Vec3 fp = field(x + dir * h), fm = field(x - dir * h);
    Vec3 df = (fp - fm) / (2.0 * h);
    return comp == 0 ? df.x : (comp == 1 ? df.y : df.z);
  };
  const Vec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
  return {d(2, ey) - d(1, ez), d(0, ez) - d(2, ex), d(1, ex) - d(0, ey)};
}

double fd_div(const FieldSampler &field, const Vec3 &x, double h) {
  const Vec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
  double dxx = (field(x + ex * h).x - field(x - ex * h).x) / (2.0 * h);
  double dyy = (field(x + ey * h).y - field(x - ey * h).y) / (2.0 * h);
  double dzz = (field(x + ez * h).z - field(x - ez * h).z) / (2.0 * h);
  return dxx + dyy + dzz;
}

Vec3 fd_curlcurl(const FieldSampler &field, const Vec3 &x, double h) {
  // curl curl = grad div - laplacian, assembled from second differences.
  const Vec3 e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Vec3 f0 = field(x);
  Vec3 lap = f0 * (-6.0);
  for (const Vec3 &dir : e) lap += field(x + dir * h) + field(x - dir * h);
  lap = lap / (h * h);

  auto comp = [](const Vec3 &v, int c) { return c == 0 ? v.x : (c == 1 ? v.y : v.z); };
  // mixed second partials d^2 f_j / dx_i dx_j summed over j gives grad(div f)_i
  Vec3 grad_div;
  for (int i = 0; i < 3; ++i) {
    double gi = 0.0;
    for (int j = 0; j < 3; ++j) {
      double val;
      if (i == j) {
        val = (comp(field(x + e[i] * h), i) - 2.0 * comp(f0, i) +
               comp(field(x - e[i] * h), i)) /
              (h * h);
      } else {
        val = (comp(field(x + e[i] * h + e[j] * h), j) -
               comp(field(x + e[i] * h - e[j] * h), j) -
               comp(field(x - e[i] * h + e[j] * h), j) +
               comp(field(x - e[i] * h - e[j] * h), j)) /
              (4.0 * h * h);
      }
      gi += val;
    }
    if (i == 0) grad_div.x = gi;
    if (i == 1) grad_div.y = gi;
    if (i == 2) grad_div.z = gi;
  }
  return grad_div - lap;
}

double reflection_1d(double lambda_norm) {
  if (!(lambda_norm >= 0.0))
    throw ConfigError("reflection_1d: lambda_norm must be >= 0");
  if (std::isinf(lambda_norm)) return 1.0;
  return (lambda_norm - 1.0) / (lambda_norm + 1.0);
}

}  // namespace enclose::oracle
