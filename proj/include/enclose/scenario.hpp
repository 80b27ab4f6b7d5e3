// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enclose/medium.hpp"
#include "enclose/obstacle.hpp"
#include "enclose/pulse.hpp"
#include "enclose/vec3.hpp"

namespace enclose {

// Ball current source: J(x,t) = f(t) * chi_B(x) * a with B = B(center, eta).
struct SourceSpec {
  Vec3 center;
  double eta = 0.0;
  Vec3 direction;  // unit
  Pulse pulse = Pulse::ramp_exp(1.0, 1.0);
};

struct GridSpec {
  double dx = 0.0;
  std::optional<Vec3> box_lo, box_hi;  // auto-sized when absent
};

struct TimeSpec {
  double T = 0.0;
  std::optional<double> dt;  // default 0.45*dx/(sqrt(3)*wave_speed)
};

struct Scenario {
  MediumParams medium;
  std::array<SourceSpec, 2> sources;  // share (center, eta, pulse), differ in a
  Obstacle obstacle;
  GridSpec grid;
  TimeSpec time;
  std::vector<double> tau_grid;                   // default grid when empty
  std::optional<std::vector<double>> t_grid_for_sweep;

  double dt() const;
  // Effective tau grid: the explicit one, else the default 16-point
  // geometric grid from 2/T to min(8/(sqrt(mu eps)*dx*50), 0.4/dt).
  std::vector<double> effective_tau_grid() const;
  std::vector<double> default_sweep_grid(int points = 12) const;

  DistanceFacts distance_facts() const;
  // Validates invariants (positivity, unit/independent directions, source
  // ball disjoint from the obstacle, CFL, clearance when a box is given).
  void validate() const;
  // Minimal axis-aligned box satisfying the clearance rule: the outer
  // boundary at least wave_speed*T/2 from both B and the obstacle bounds.
  void required_box(Vec3 &lo, Vec3 &hi) const;

  uint64_t hash() const;
};

Scenario load_scenario(const std::string &path);
Scenario scenario_from_json_text(const std::string &text);
std::string scenario_to_json_text(const Scenario &s);

}  // namespace enclose
