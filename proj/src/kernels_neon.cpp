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

// aarch64 only; one complex<double> per float64x2_t.

#include <arm_neon.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "opgraph/kernels.hpp"

namespace opgraph::kernels::neon {

void cdotc(const double *a, const double *b, std::size_t len, double *out) {
    float64x2_t prod0 = vdupq_n_f64(0.0), prod1 = vdupq_n_f64(0.0);
    float64x2_t cross0 = vdupq_n_f64(0.0), cross1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        float64x2_t a0 = vld1q_f64(a + 2 * i), b0 = vld1q_f64(b + 2 * i);
        float64x2_t a1 = vld1q_f64(a + 2 * i + 2), b1 = vld1q_f64(b + 2 * i + 2);
        prod0 = vfmaq_f64(prod0, a0, b0);
        prod1 = vfmaq_f64(prod1, a1, b1);
        cross0 = vfmaq_f64(cross0, a0, vextq_f64(b0, b0, 1));
        cross1 = vfmaq_f64(cross1, a1, vextq_f64(b1, b1, 1));
    }
    float64x2_t prod = vaddq_f64(prod0, prod1);
    float64x2_t cross = vaddq_f64(cross0, cross1);
    double re = vgetq_lane_f64(prod, 0) + vgetq_lane_f64(prod, 1);
    double im = vgetq_lane_f64(cross, 1) - vgetq_lane_f64(cross, 0);
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
    const double sign_data[2] = {-alpha_im, alpha_im};
    float64x2_t ar = vdupq_n_f64(alpha_re);
    float64x2_t ai = vld1q_f64(sign_data);
    for (std::size_t i = 0; i < len; i++) {
        float64x2_t xv = vld1q_f64(x + 2 * i);
        float64x2_t yv = vld1q_f64(y + 2 * i);
        yv = vfmaq_f64(yv, ar, xv);
        yv = vfmaq_f64(yv, ai, vextq_f64(xv, xv, 1));
        vst1q_f64(y + 2 * i, yv);
    }
}

double max_abs_diff(const double *a, const double *b, std::size_t len) {
    double best = 0.0;
    for (std::size_t i = 0; i < len; i++) {
        float64x2_t d = vsubq_f64(vld1q_f64(a + 2 * i), vld1q_f64(b + 2 * i));
        d = vmulq_f64(d, d);
        best = std::max(best, vgetq_lane_f64(d, 0) + vgetq_lane_f64(d, 1));
    }
    return std::sqrt(best);
}

}  // namespace opgraph::kernels::neon
