// Copyright 2026 The opgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2 -mfma. Only reached through the dispatch table after a
// CPUID check, so nothing in here may be an inline function shared with other
// translation units.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "opgraph/kernels.hpp"

namespace opgraph::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

}  // namespace

// Lanes hold [re0, im0, re1, im1]. `prod` accumulates a*b lane-wise (ar*br, ai*bi),
// `cross` accumulates a*swap(b) (ar*bi, ai*br); the real part is the sum of
// prod, the imaginary part is odd lanes of cross minus even lanes.
void cdotc(const double *a, const double *b, std::size_t len, double *out) {
    __m256d prod0 = _mm256_setzero_pd(), prod1 = _mm256_setzero_pd();
    __m256d cross0 = _mm256_setzero_pd(), cross1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d a0 = _mm256_loadu_pd(a + 2 * i);
        __m256d b0 = _mm256_loadu_pd(b + 2 * i);
        __m256d a1 = _mm256_loadu_pd(a + 2 * i + 4);
        __m256d b1 = _mm256_loadu_pd(b + 2 * i + 4);
        prod0 = _mm256_fmadd_pd(a0, b0, prod0);
        prod1 = _mm256_fmadd_pd(a1, b1, prod1);
        cross0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), cross0);
        cross1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), cross1);
    }
    for (; i + 2 <= len; i += 2) {
        __m256d a0 = _mm256_loadu_pd(a + 2 * i);
        __m256d b0 = _mm256_loadu_pd(b + 2 * i);
        prod0 = _mm256_fmadd_pd(a0, b0, prod0);
        cross0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), cross0);
    }
    __m256d prod = _mm256_add_pd(prod0, prod1);
    __m256d cross = _mm256_add_pd(cross0, cross1);
    // Negate even lanes of cross so a plain horizontal sum gives the imaginary part.
    cross = _mm256_mul_pd(cross, _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0));
    double re = hsum(prod);
    double im = hsum(cross);
    for (; i < len; i++) {
        double ar = a[2 * i], ai = a[2 * i + 1];
        double br = b[2 * i], bi = b[2 * i + 1];
        re += ar * br + ai * bi;
        im += ai * br - ar * bi;
    }
    out[0] = re;
    out[1] = im;
}

void caxpy(double alpha_re, double alpha_im, const double *x, double *y, std::size_t len) {
    __m256d ar = _mm256_set1_pd(alpha_re);
    __m256d ai = _mm256_set1_pd(alpha_im);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        __m256d xv = _mm256_loadu_pd(x + 2 * i);
        __m256d yv = _mm256_loadu_pd(y + 2 * i);
        __m256d swapped = _mm256_mul_pd(ai, _mm256_permute_pd(xv, 0b0101));
        // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
        __m256d t = _mm256_fmaddsub_pd(ar, xv, swapped);
        _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(yv, t));
    }
    for (; i < len; i++) {
        double xr = x[2 * i], xi = x[2 * i + 1];
        y[2 * i] += alpha_re * xr - alpha_im * xi;
        y[2 * i + 1] += alpha_re * xi + alpha_im * xr;
    }
}

double max_abs_diff(const double *a, const double *b, std::size_t len) {
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + 2 * i), _mm256_loadu_pd(b + 2 * i));
        d = _mm256_mul_pd(d, d);
        // |z|^2 in both lanes of each complex
        __m256d sq = _mm256_hadd_pd(d, d);
        best = _mm256_max_pd(best, sq);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double result = std::sqrt(std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3])));
    for (; i < len; i++) {
        double v = std::hypot(a[2 * i] - b[2 * i], a[2 * i + 1] - b[2 * i + 1]);
        result = v > result ? v : result;
    }
    return result;
}

}  // namespace opgraph::kernels::avx2
