// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace enclose {

namespace {

double level_set_value(const LevelSetShape &ls, const Vec3 &x) {
  double fx = (x.x - ls.origin.x) / ls.dx;
  double fy = (x.y - ls.origin.y) / ls.dx;
  double fz = (x.z - ls.origin.z) / ls.dx;
  if (fx < 0 || fy < 0 || fz < 0 || fx > ls.dims[0] - 1 || fy > ls.dims[1] - 1 ||
      fz > ls.dims[2] - 1)
    return std::numeric_limits<double>::max();  // outside sampled box: exterior
  int i = std::min(static_cast<int>(fx), ls.dims[0] - 2);
  int j = std::min(static_cast<int>(fy), ls.dims[1] - 2);
  int k = std::min(static_cast<int>(fz), ls.dims[2] - 2);
  double u = fx - i, v = fy - j, w = fz - k;
  auto at = [&](int a, int b, int c) {
    return ls.phi[a + ls.dims[0] * (b + static_cast<std::size_t>(ls.dims[1]) * c)];
  };
  double c00 = at(i, j, k) * (1 - u) + at(i + 1, j, k) * u;
  double c10 = at(i, j + 1, k) * (1 - u) + at(i + 1, j + 1, k) * u;
  double c01 = at(i, j, k + 1) * (1 - u) + at(i + 1, j, k + 1) * u;
  double c11 = at(i, j + 1, k + 1) * (1 - u) + at(i + 1, j + 1, k + 1) * u;
  double c0 = c00 * (1 - v) + c10 * v;
  double c1 = c01 * (1 - v) + c11 * v;
  return c0 * (1 - w) + c1 * w;
}

double box_boundary_distance(const BoxShape &b, const Vec3 &x) {
  // Distance to the surface of the box (works inside and outside).
  double dx = std::max({b.lo.x - x.x, x.x - b.hi.x, 0.0});
  double dy = std::max({b.lo.y - x.y, x.y - b.hi.y, 0.0});
  double dz = std::max({b.lo.z - x.z, x.z - b.hi.z, 0.0});
  double outside = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (outside > 0.0) return outside;
  double ix = std::min(x.x - b.lo.x, b.hi.x - x.x);
  double iy = std::min(x.y - b.lo.y, b.hi.y - x.y);
  double iz = std::min(x.z - b.lo.z, b.hi.z - x.z);
  return std::min({ix, iy, iz});
}

}  // namespace

Obstacle::Obstacle(Shape shape, LambdaField lambda)
    : shape_(std::move(shape)), lambda_(std::move(lambda)) {
  if (const auto *s = std::get_if<Sphere>(&shape_)) {
    if (!(s->radius > 0.0)) throw ConfigError("obstacle: sphere radius must be positive");
  } else if (const auto *b = std::get_if<BoxShape>(&shape_)) {
    if (!(b->lo.x < b->hi.x && b->lo.y < b->hi.y && b->lo.z < b->hi.z))
      throw ConfigError("obstacle: box must have lo < hi");
  } else if (const auto *ls = std::get_if<LevelSetShape>(&shape_)) {
    if (ls->dims[0] < 2 || ls->dims[1] < 2 || ls->dims[2] < 2 || !(ls->dx > 0.0))
      throw ConfigError("obstacle: level set needs dx > 0 and >= 2 nodes per axis");
    std::size_t n = static_cast<std::size_t>(ls->dims[0]) * ls->dims[1] * ls->dims[2];
    if (ls->phi.size() != n)
      throw ConfigError("obstacle: level set sample count mismatch");
  }
  if (const auto *c = std::get_if<LambdaConstant>(&lambda_)) {
    if (c->value < 0.0) throw ConfigError("obstacle: lambda must be >= 0");
  } else if (const auto *pw = std::get_if<LambdaPiecewise>(&lambda_)) {
    if (pw->fallback < 0.0) throw ConfigError("obstacle: lambda must be >= 0");
    for (const auto &r : pw->regions)
      if (r.value < 0.0) throw ConfigError("obstacle: lambda must be >= 0");
  } else if (const auto *tb = std::get_if<LambdaTable>(&lambda_)) {
    if (tb->points.empty() || tb->points.size() != tb->values.size())
      throw ConfigError("obstacle: lambda table needs matching points/values");
    for (double v : tb->values)
      if (v < 0.0) throw ConfigError("obstacle: lambda must be >= 0");
  }
}

bool Obstacle::inside(const Vec3 &x) const {
  if (const auto *s = std::get_if<Sphere>(&shape_))
    return (x - s->center).norm2() < s->radius * s->radius;
  if (const auto *b = std::get_if<BoxShape>(&shape_))
    return x.x > b->lo.x && x.x < b->hi.x && x.y > b->lo.y && x.y < b->hi.y &&
           x.z > b->lo.z && x.z < b->hi.z;
  return level_set_value(std::get<LevelSetShape>(shape_), x) < 0.0;
}

double Obstacle::distance_to_boundary(const Vec3 &x) const {
  if (const auto *s = std::get_if<Sphere>(&shape_))
    return std::abs((x - s->center).norm() - s->radius);
  if (const auto *b = std::get_if<BoxShape>(&shape_))
    return box_boundary_distance(*b, x);
  // Level set: scan grid edges for sign changes and keep the closest
  // linearly interpolated crossing.
  const auto &ls = std::get<LevelSetShape>(shape_);
  double best = std::numeric_limits<double>::max();
  auto node = [&](int i, int j, int k) {
    return Vec3{ls.origin.x + i * ls.dx, ls.origin.y + j * ls.dx,
                ls.origin.z + k * ls.dx};
  };
  auto at = [&](int i, int j, int k) {
    return ls.phi[i + ls.dims[0] * (j + static_cast<std::size_t>(ls.dims[1]) * k)];
  };
  for (int k = 0; k < ls.dims[2]; ++k)
    for (int j = 0; j < ls.dims[1]; ++j)
      for (int i = 0; i < ls.dims[0]; ++i) {
        double p0 = at(i, j, k);
        const int di[3] = {1, 0, 0}, dj[3] = {0, 1, 0}, dk[3] = {0, 0, 1};
        for (int a = 0; a < 3; ++a) {
          int ii = i + di[a], jj = j + dj[a], kk = k + dk[a];
          if (ii >= ls.dims[0] || jj >= ls.dims[1] || kk >= ls.dims[2]) continue;
          double p1 = at(ii, jj, kk);
          if ((p0 < 0) == (p1 < 0)) continue;
          double s = p0 / (p0 - p1);
          Vec3 c = node(i, j, k) + (node(ii, jj, kk) - node(i, j, k)) * s;
          best = std::min(best, (c - x).norm());
        }
      }
  if (best == std::numeric_limits<double>::max())
    throw ConfigError("obstacle: level set has no zero crossing");
  return best;
}

double Obstacle::lambda_at(const Vec3 &x) const {
  if (const auto *c = std::get_if<LambdaConstant>(&lambda_)) return c->value;
  if (const auto *pw = std::get_if<LambdaPiecewise>(&lambda_)) {
    for (const auto &r : pw->regions)
      if (r.normal.dot(x) >= r.offset) return r.value;
    return pw->fallback;
  }
  const auto &tb = std::get<LambdaTable>(lambda_);
  std::size_t best = 0;
  double bd = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < tb.points.size(); ++i) {
    double d = (tb.points[i] - x).norm2();
    if (d < bd) {
      bd = d;
      best = i;
    }
  }
  return tb.values[best];
}

Vec3 Obstacle::bounds_lo() const {
  if (const auto *s = std::get_if<Sphere>(&shape_))
    return s->center - Vec3{s->radius, s->radius, s->radius};
  if (const auto *b = std::get_if<BoxShape>(&shape_)) return b->lo;
  return std::get<LevelSetShape>(shape_).origin;
}

Vec3 Obstacle::bounds_hi() const {
  if (const auto *s = std::get_if<Sphere>(&shape_))
    return s->center + Vec3{s->radius, s->radius, s->radius};
  if (const auto *b = std::get_if<BoxShape>(&shape_)) return b->hi;
  const auto &ls = std::get<LevelSetShape>(shape_);
  return ls.origin + Vec3{(ls.dims[0] - 1) * ls.dx, (ls.dims[1] - 1) * ls.dx,
                          (ls.dims[2] - 1) * ls.dx};
}

}  // namespace enclose
