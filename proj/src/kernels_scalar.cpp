// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

// Reference kernels. Compiled with fp-contract off so that the SIMD
// variants, which use explicit mul/add, match them bit for bit.

#include "enclose/kernels.hpp"

namespace enclose::kern {

namespace {

void curl_update_scalar(double *out, const double *a, std::ptrdiff_t a0,
                        std::ptrdiff_t a1, const double *b, std::ptrdiff_t b0,
                        std::ptrdiff_t b1, double c, const Box3 &box,
                        const Strides &st) {
  for (int k = box.lo[2]; k < box.hi[2]; ++k)
    for (int j = box.lo[1]; j < box.hi[1]; ++j) {
      std::ptrdiff_t row = st.sy * j + st.sz * k;
      for (int i = box.lo[0]; i < box.hi[0]; ++i) {
        std::ptrdiff_t l = row + i;
        out[l] += c * (a[l + a0] - a[l + a1] - b[l + b0] + b[l + b1]);
      }
    }
}

double curl_update_dot_scalar(double *out, const double *a, std::ptrdiff_t a0,
                              std::ptrdiff_t a1, const double *b,
                              std::ptrdiff_t b0, std::ptrdiff_t b1, double c,
                              const Box3 &box, const Strides &st) {
  double acc = 0.0, comp = 0.0;
  for (int k = box.lo[2]; k < box.hi[2]; ++k)
    for (int j = box.lo[1]; j < box.hi[1]; ++j) {
      std::ptrdiff_t row = st.sy * j + st.sz * k;
      double partial = 0.0;
      for (int i = box.lo[0]; i < box.hi[0]; ++i) {
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

double sum_sq_scalar(const double *v, const Box3 &box, const Strides &st) {
  double acc = 0.0, comp = 0.0;
  for (int k = box.lo[2]; k < box.hi[2]; ++k)
    for (int j = box.lo[1]; j < box.hi[1]; ++j) {
      std::ptrdiff_t row = st.sy * j + st.sz * k;
      double partial = 0.0;
      for (int i = box.lo[0]; i < box.hi[0]; ++i) {
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

const KernelSet &scalar_kernels() {
  static const KernelSet set{"scalar", curl_update_scalar, curl_update_dot_scalar,
                             sum_sq_scalar};
  return set;
}

}  // namespace enclose::kern
