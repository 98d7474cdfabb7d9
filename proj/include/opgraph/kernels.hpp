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

#ifndef OPGRAPH_KERNELS_HPP
#define OPGRAPH_KERNELS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

/// Inner loops over interleaved complex<double> arrays (re, im, re, im, ...).
///
/// Every kernel exists as a scalar reference implementation plus SIMD variants.
/// The active table is picked once from the running CPU and can be overridden
/// (tests, `OPGRAPH_ISA=scalar`). Each variant has a fixed summation order, so
/// results are bitwise reproducible for a given ISA, but different ISAs agree
/// only up to rounding.
namespace opgraph::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
    Isa isa;
    /// sum_i a[i] * conj(b[i]) over `len` complex entries; result written to out[0..1].
    void (*cdotc)(const double *a, const double *b, std::size_t len, double *out);
    /// y[i] += alpha * x[i], alpha given as (re, im).
    void (*caxpy)(double alpha_re, double alpha_im, const double *x, double *y, std::size_t len);
    /// max_i |a[i] - b[i]|.
    double (*max_abs_diff)(const double *a, const double *b, std::size_t len);
};

namespace scalar {
void cdotc(const double *a, const double *b, std::size_t len, double *out);
void caxpy(double alpha_re, double alpha_im, const double *x, double *y, std::size_t len);
double max_abs_diff(const double *a, const double *b, std::size_t len);
}  // namespace scalar

#if defined(OPGRAPH_HAVE_AVX2)
namespace avx2 {
void cdotc(const double *a, const double *b, std::size_t len, double *out);
void caxpy(double alpha_re, double alpha_im, const double *x, double *y, std::size_t len);
double max_abs_diff(const double *a, const double *b, std::size_t len);
}  // namespace avx2
#endif

#if defined(OPGRAPH_HAVE_NEON)
namespace neon {
void cdotc(const double *a, const double *b, std::size_t len, double *out);
void caxpy(double alpha_re, double alpha_im, const double *x, double *y, std::size_t len);
double max_abs_diff(const double *a, const double *b, std::size_t len);
}  // namespace neon
#endif

/// Tables compiled into this binary and supported by the running CPU, scalar first.
std::vector<KernelTable> available_tables();

bool isa_supported(Isa isa);

/// The table used by the linear algebra layer.
const KernelTable &active();

/// Force a specific ISA. Returns false (and leaves the selection unchanged) if
/// it is not available on this machine.
bool select(Isa isa);

/// Reset to the best ISA detected on this CPU (honours OPGRAPH_ISA).
void select_best();

}  // namespace opgraph::kernels

#endif
