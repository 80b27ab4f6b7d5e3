// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "enclose/errors.hpp"

namespace enclose {

namespace {

GaussRule build_rule(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev estimate.
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    auto legendre = [n](double x, double &dp) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      return p1;
    };
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p = legendre(t, dp);
      double dt = p / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    legendre(t, dp);
    r.nodes[i] = t;
    r.weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return r;
}

}  // namespace

const GaussRule &gauss_legendre(int n) {
  if (n < 1) throw ConfigError("gauss_legendre: order must be >= 1");
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

}  // namespace enclose
