// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "enclose/kernels.hpp"
#include "enclose/scenario.hpp"

namespace enclose::fdtd {

// Standard staggered layout on a node lattice of (nx+1)*(ny+1)*(nz+1)
// points, x fastest. Component positions relative to node (i,j,k):
//   Ex (i+1/2, j, k)    Hx (i, j+1/2, k+1/2)
//   Ey (i, j+1/2, k)    Hy (i+1/2, j, k+1/2)
//   Ez (i, j, k+1/2)    Hz (i+1/2, j+1/2, k)
// Cell (i,j,k) spans [i,i+1]x[j,j+1]x[k,k+1] in index space. The obstacle is
// realized as a staircase of whole cells; interior fields are pinned to zero
// and the Leontovich condition enters through the tangential-E update on the
// staircase surface.

// Tangential E edge on the staircase surface. The update integrates the
// circulation over the exterior part of the edge's control volume (fraction
// q of the full cell) and carries the impedance loss semi-implicitly:
//   (1+beta/2) E_new = (1-beta/2) E_old + (dt/(eps q dx)) * weighted curl,
// with beta = dt*loss_coef/eps. The per-face weights alpha are the exterior
// fraction of each neighboring face, which keeps the update adjoint to the
// face updates and makes the discrete energy exactly non-increasing.
struct BoundaryEdge {
  int64_t idx = 0;
  double q = 1.0;            // exterior quadrant fraction (1/4, 1/2, 3/4)
  double alpha[4] = {1, 1, 1, 1};
  double loss_coef = 0.0;    // lambda-weighted wall trace / (q dx^2)
};

// Staircase surface face (one obstacle cell, one exterior cell).
struct WallFace {
  int64_t idx = 0;
  int axis = 0;          // face normal axis = H component axis
  Vec3 normal;           // outward (obstacle -> exterior), axis-aligned
  double lambda = 0.0;   // sampled at the face center
};

struct Fields {
  std::array<std::vector<double>, 3> c;
  void resize(std::size_t n) {
    for (auto &v : c) v.assign(n, 0.0);
  }
};

struct YeeGrid {
  double dx = 0.0;
  double dt = 0.0;
  int nx = 0, ny = 0, nz = 0;  // cells per axis
  Vec3 origin;                 // node (0,0,0)
  MediumParams medium;
  bool with_obstacle = false;

  std::ptrdiff_t sx = 1, sy = 0, sz = 0;
  std::size_t n_nodes = 0;

  kern::Box3 e_box[3];  // bulk update ranges (outer tangential E pinned: PEC)
  kern::Box3 h_box[3];

  std::array<std::vector<BoundaryEdge>, 3> boundary_edges;  // per E component
  std::array<std::vector<int64_t>, 3> wall_faces;           // alpha = 1/2 faces
  std::array<std::vector<int64_t>, 3> rezero_faces;  // pinned faces touching live edges
  std::vector<WallFace> wall_face_info;

  std::vector<int64_t> ball_cells;                   // low-corner node index
  std::array<std::vector<int64_t>, 3> source_edges;  // E edges with center in B

  int64_t node(int i, int j, int k) const {
    return i + sy * j + sz * k;
  }
  Vec3 node_pos(int i, int j, int k) const {
    return origin + Vec3{i * dx, j * dx, k * dx};
  }
};

// Builds the grid and material lists. When the scenario has no explicit box
// the minimal box satisfying the clearance rule is used, rounded up to whole
// cells. Throws ConfigError on sizing/CFL violations (reporting the minimal
// compliant box) and on negative impedance samples.
YeeGrid build_grid(const Scenario &scenario, bool with_obstacle);

}  // namespace enclose::fdtd
