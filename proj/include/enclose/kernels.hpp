// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace enclose::kern {

// Node-index sub-box [lo, hi) per axis, iterated x fastest.
struct Box3 {
  int lo[3] = {0, 0, 0};
  int hi[3] = {0, 0, 0};
};

struct Strides {
  std::ptrdiff_t sy = 0;  // stride between consecutive j at fixed k
  std::ptrdiff_t sz = 0;  // stride between consecutive k
};

// The two inner loops of the leapfrog update, plus the reductions feeding
// the energy monitor. Every kernel is elementwise over the box:
//
//   curl_update:      out[l] += c*(a[l+a0] - a[l+a1] - b[l+b0] + b[l+b1])
//   curl_update_dot:  same, returning sum(out_old*out_new) over the box
//   sum_sq:           sum(v[l]^2) over the box
//
// Reductions accumulate one partial per x-row and fold the rows with Kahan
// compensation in a fixed order, so each variant is deterministic.
// Variants must produce bit-identical field updates (mul/add only, no FMA);
// reductions may differ in rounding between variants.
struct KernelSet {
  const char *name;
  void (*curl_update)(double *out, const double *a, std::ptrdiff_t a0,
                      std::ptrdiff_t a1, const double *b, std::ptrdiff_t b0,
                      std::ptrdiff_t b1, double c, const Box3 &box,
                      const Strides &st);
  double (*curl_update_dot)(double *out, const double *a, std::ptrdiff_t a0,
                            std::ptrdiff_t a1, const double *b, std::ptrdiff_t b0,
                            std::ptrdiff_t b1, double c, const Box3 &box,
                            const Strides &st);
  double (*sum_sq)(const double *v, const Box3 &box, const Strides &st);
};

const KernelSet &scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
const KernelSet &avx2_kernels();
#endif
#if defined(__aarch64__)
const KernelSet &neon_kernels();
#endif

// Best variant the CPU supports, overridable with ENCLOSE_KERNEL=<name>.
const KernelSet &active_kernels();
const KernelSet *kernels_by_name(std::string_view name);
std::vector<const KernelSet *> available_kernels();

}  // namespace enclose::kern
