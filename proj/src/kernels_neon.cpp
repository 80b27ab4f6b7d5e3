// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

// NEON variants (aarch64 baseline). Mul/add only, matching the scalar
// reference bit for bit on field updates.

#include "enclose/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace enclose::kern {

namespace {

void curl_update_neon(double *out, const double *a, std::ptrdiff_t a0,
                      std::ptrdiff_t a1, const double *b, std::ptrdiff_t b0,
                      std::ptrdiff_t b1, double c, const Box3 &box,
                      const Strides &st) {
  const float64x2_t vc = vdupq_n_f64(c);
  const int i0 = box.lo[0], i1 = box.hi[0];
  const int iv = i0 + ((i1 - i0) & ~1);
  for (int k = box.lo[2]; k < box.hi[2]; ++k)
    for (int j = box.lo[1]; j < box.hi[1]; ++j) {
      std::ptrdiff_t row = st.sy * j + st.sz * k;
      int i = i0;
      for (; i < iv; i += 2) {
        std::ptrdiff_t l = row + i;
        float64x2_t da = vsubq_f64(vld1q_f64(a + l + a0), vld1q_f64(a + l + a1));
        float64x2_t db = vsubq_f64(vld1q_f64(b + l + b0), vld1q_f64(b + l + b1));
        float64x2_t upd = vmulq_f64(vc, vsubq_f64(da, db));
        vst1q_f64(out + l, vaddq_f64(vld1q_f64(out + l), upd));
      }
      for (; i < i1; ++i) {
        std::ptrdiff_t l = row + i;
        out[l] += c * (a[l + a0] - a[l + a1] - b[l + b0] + b[l + b1]);
      }
    }
}

double curl_update_dot_neon(double *out, const double *a, std::ptrdiff_t a0,
                            std::ptrdiff_t a1, const double *b,
                            std::ptrdiff_t b0, std::ptrdiff_t b1, double c,
                            const Box3 &box, const Strides &st) {
  const float64x2_t vc = vdupq_n_f64(c);
  const int i0 = box.lo[0], i1 = box.hi[0];
  const int iv = i0 + ((i1 - i0) & ~1);
  double acc = 0.0, comp = 0.0;
  for (int k = box.lo[2]; k < box.hi[2]; ++k)
    for (int j = box.lo[1]; j < box.hi[1]; ++j) {
      std::ptrdiff_t row = st.sy * j + st.sz * k;
      float64x2_t vpartial = vdupq_n_f64(0.0);
      int i = i0;
      for (; i < iv; i += 2) {
        std::ptrdiff_t l = row + i;
        float64x2_t old = vld1q_f64(out + l);
        float64x2_t da = vsubq_f64(vld1q_f64(a + l + a0), vld1q_f64(a + l + a1));
        float64x2_t db = vsubq_f64(vld1q_f64(b + l + b0), vld1q_f64(b + l + b1));
        float64x2_t next = vaddq_f64(old, vmulq_f64(vc, vsubq_f64(da, db)));
        vst1q_f64(out + l, next);
        vpartial = vaddq_f64(vpartial, vmulq_f64(old, next));
      }
      double partial = vgetq_lane_f64(vpartial, 0) + vgetq_lane_f64(vpartial, 1);
      for (; i < i1; ++i) {
        std::ptrdiff_t l = row + i;
        double old = out[l];
        double next = old + c * (a[l + a0] - a[l + a1] - b[l + b0] + b[l + b1]);
        out[l] = next;
        partial += old * next;
      }
      double y = partial - comp;
      double t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
  return acc;
}

double sum_sq_neon(const double *v, const Box3 &box, const Strides &st) {
  const int i0 = box.lo[0], i1 = box.hi[0];
  const int iv = i0 + ((i1 - i0) & ~1);
  double acc = 0.0, comp = 0.0;
  for (int k = box.lo[2]; k < box.hi[2]; ++k)
    for (int j = box.lo[1]; j < box.hi[1]; ++j) {
      std::ptrdiff_t row = st.sy * j + st.sz * k;
      float64x2_t vpartial = vdupq_n_f64(0.0);
      int i = i0;
      for (; i < iv; i += 2) {
        float64x2_t x = vld1q_f64(v + row + i);
        vpartial = vaddq_f64(vpartial, vmulq_f64(x, x));
      }
      double partial = vgetq_lane_f64(vpartial, 0) + vgetq_lane_f64(vpartial, 1);
      for (; i < i1; ++i) {
        double x = v[row + i];
        partial += x * x;
      }
      double y = partial - comp;
      double t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
  return acc;
}

}  // namespace

const KernelSet &neon_kernels() {
  static const KernelSet set{"neon", curl_update_neon, curl_update_dot_neon,
                             sum_sq_neon};
  return set;
}

}  // namespace enclose::kern

#endif  // aarch64
