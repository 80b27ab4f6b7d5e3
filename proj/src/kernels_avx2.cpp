// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 variants of the leapfrog inner loops. Arithmetic is mul/add only (no
// FMA) so field updates are bit-identical to the scalar reference; the
// reductions keep the same row structure but fold four lanes per row, so
// their rounding differs from scalar within ~1e-15 relative.

#include "enclose/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace enclose::kern {

namespace {

void curl_update_avx2(double *out, const double *a, std::ptrdiff_t a0,
                      std::ptrdiff_t a1, const double *b, std::ptrdiff_t b0,
                      std::ptrdiff_t b1, double c, const Box3 &box,
                      const Strides &st) {
  const __m256d vc = _mm256_set1_pd(c);
  const int i0 = box.lo[0], i1 = box.hi[0];
  const int iv = i0 + ((i1 - i0) & ~3);
  for (int k = box.lo[2]; k < box.hi[2]; ++k)
    for (int j = box.lo[1]; j < box.hi[1]; ++j) {
      std::ptrdiff_t row = st.sy * j + st.sz * k;
      int i = i0;
      for (; i < iv; i += 4) {
        std::ptrdiff_t l = row + i;
        __m256d da = _mm256_sub_pd(_mm256_loadu_pd(a + l + a0),
                                   _mm256_loadu_pd(a + l + a1));
        __m256d db = _mm256_sub_pd(_mm256_loadu_pd(b + l + b0),
                                   _mm256_loadu_pd(b + l + b1));
        __m256d upd = _mm256_mul_pd(vc, _mm256_sub_pd(da, db));
        _mm256_storeu_pd(out + l, _mm256_add_pd(_mm256_loadu_pd(out + l), upd));
      }
      for (; i < i1; ++i) {
        std::ptrdiff_t l = row + i;
        out[l] += c * (a[l + a0] - a[l + a1] - b[l + b0] + b[l + b1]);
      }
    }
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double curl_update_dot_avx2(double *out, const double *a, std::ptrdiff_t a0,
                            std::ptrdiff_t a1, const double *b,
                            std::ptrdiff_t b0, std::ptrdiff_t b1, double c,
                            const Box3 &box, const Strides &st) {
  const __m256d vc = _mm256_set1_pd(c);
  const int i0 = box.lo[0], i1 = box.hi[0];
  const int iv = i0 + ((i1 - i0) & ~3);
  double acc = 0.0, comp = 0.0;
  for (int k = box.lo[2]; k < box.hi[2]; ++k)
    for (int j = box.lo[1]; j < box.hi[1]; ++j) {
      std::ptrdiff_t row = st.sy * j + st.sz * k;
      __m256d vpartial = _mm256_setzero_pd();
      double partial = 0.0;
      int i = i0;
      for (; i < iv; i += 4) {
        std::ptrdiff_t l = row + i;
        __m256d old = _mm256_loadu_pd(out + l);
        __m256d da = _mm256_sub_pd(_mm256_loadu_pd(a + l + a0),
                                   _mm256_loadu_pd(a + l + a1));
        __m256d db = _mm256_sub_pd(_mm256_loadu_pd(b + l + b0),
                                   _mm256_loadu_pd(b + l + b1));
        __m256d next =
            _mm256_add_pd(old, _mm256_mul_pd(vc, _mm256_sub_pd(da, db)));
        _mm256_storeu_pd(out + l, next);
        vpartial = _mm256_add_pd(vpartial, _mm256_mul_pd(old, next));
      }
      partial = hsum(vpartial);
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

double sum_sq_avx2(const double *v, const Box3 &box, const Strides &st) {
  const int i0 = box.lo[0], i1 = box.hi[0];
  const int iv = i0 + ((i1 - i0) & ~3);
  double acc = 0.0, comp = 0.0;
  for (int k = box.lo[2]; k < box.hi[2]; ++k)
    for (int j = box.lo[1]; j < box.hi[1]; ++j) {
      std::ptrdiff_t row = st.sy * j + st.sz * k;
      __m256d vpartial = _mm256_setzero_pd();
      int i = i0;
      for (; i < iv; i += 4) {
        __m256d x = _mm256_loadu_pd(v + row + i);
        vpartial = _mm256_add_pd(vpartial, _mm256_mul_pd(x, x));
      }
      double partial = hsum(vpartial);
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

const KernelSet &avx2_kernels() {
  static const KernelSet set{"avx2", curl_update_avx2, curl_update_dot_avx2,
                             sum_sq_avx2};
  return set;
}

}  // namespace enclose::kern

#endif  // x86_64
