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

#include <algorithm>
#include <cmath>

#include "opgraph/kernels.hpp"

namespace opgraph::kernels::scalar {

void cdotc(const double *a, const double *b, std::size_t len, double *out) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < len; i++) {
        double ar = a[2 * i], ai = a[2 * i + 1];
        double br = b[2 * i], bi = b[2 * i + 1];
        re += ar * br + ai * bi;
        im += ai * br - ar * bi;
    }
    out[0] = re;
    out[1] = im;
}

void caxpy(double alpha_re, double alpha_im, const double *x, double *y, std::size_t len) {
    for (std::size_t i = 0; i < len; i++) {
        double xr = x[2 * i], xi = x[2 * i + 1];
        y[2 * i] += alpha_re * xr - alpha_im * xi;
        y[2 * i + 1] += alpha_re * xi + alpha_im * xr;
    }
}

double max_abs_diff(const double *a, const double *b, std::size_t len) {
    double best = 0.0;
    for (std::size_t i = 0; i < len; i++) {
        best = std::max(best, std::hypot(a[2 * i] - b[2 * i], a[2 * i + 1] - b[2 * i + 1]));
    }
    return best;
}

}  // namespace opgraph::kernels::scalar
