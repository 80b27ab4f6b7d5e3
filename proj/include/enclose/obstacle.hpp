// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <variant>
#include <vector>

#include "enclose/errors.hpp"
#include "enclose/vec3.hpp"

namespace enclose {

struct Sphere {
  Vec3 center;
  double radius = 0.0;
};

struct BoxShape {
  Vec3 lo, hi;
};

// Signed distance sampled on a regular grid; negative inside. Trilinear
// interpolation between nodes; queries outside the sampled box are exterior.
struct LevelSetShape {
  Vec3 origin;
  double dx = 0.0;
  std::array<int, 3> dims = {0, 0, 0};  // node counts
  std::vector<double> phi;              // dims[0]*dims[1]*dims[2], x fastest
};

using Shape = std::variant<Sphere, BoxShape, LevelSetShape>;

struct LambdaConstant {
  double value = 0.0;
};

// Piecewise-constant impedance by half-space region; first matching region
// wins, fallback applies elsewhere.
struct LambdaPiecewise {
  struct Region {
    Vec3 normal;
    double offset = 0.0;  // region: normal . x >= offset
    double value = 0.0;
  };
  std::vector<Region> regions;
  double fallback = 0.0;
};

// Nearest-sample lookup of scattered surface samples.
struct LambdaTable {
  std::vector<Vec3> points;
  std::vector<double> values;
};

using LambdaField = std::variant<LambdaConstant, LambdaPiecewise, LambdaTable>;

class Obstacle {
 public:
  Obstacle() = default;
  Obstacle(Shape shape, LambdaField lambda);

  const Shape &shape() const { return shape_; }
  const LambdaField &lambda() const { return lambda_; }
  bool is_sphere() const { return std::holds_alternative<Sphere>(shape_); }

  bool inside(const Vec3 &x) const;
  // Distance from x to the obstacle boundary, d_{boundary}(x). Exact for
  // spheres and boxes; level sets sample interpolated zero crossings along
  // grid edges (accurate to the level-set resolution).
  double distance_to_boundary(const Vec3 &x) const;
  double lambda_at(const Vec3 &x) const;

  // Axis-aligned bounds enclosing the obstacle.
  Vec3 bounds_lo() const;
  Vec3 bounds_hi() const;

 private:
  Shape shape_;
  LambdaField lambda_;
};

// Ground-truth distances of a scenario: dist(D,B) = d_boundary(p) - eta.
struct DistanceFacts {
  double dist_DB = 0.0;
  double d_boundary_p = 0.0;
  double eta = 0.0;
};

}  // namespace enclose
