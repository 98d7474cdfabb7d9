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

#include "opgraph/kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace opgraph::kernels;

namespace {

std::vector<double> random_complex(std::size_t len, std::mt19937_64 &rng) {
    std::normal_distribution<double> dist;
    std::vector<double> out(2 * len);
    for (auto &v : out) {
        v = dist(rng);
    }
    return out;
}

// Lengths straddle every unroll boundary of the SIMD variants.
const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 63, 64, 65, 1000};

}  // namespace

TEST(kernels, scalar_always_available) {
    auto tables = available_tables();
    ASSERT_FALSE(tables.empty());
    EXPECT_EQ(tables[0].isa, Isa::scalar);
    EXPECT_TRUE(isa_supported(Isa::scalar));
}

TEST(kernels, select_round_trip) {
    for (const auto &t : available_tables()) {
        ASSERT_TRUE(select(t.isa));
        EXPECT_EQ(active().isa, t.isa);
    }
    select_best();
}

TEST(kernels, unsupported_isa_is_refused) {
    select_best();
    Isa before = active().isa;
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        if (!isa_supported(isa)) {
            EXPECT_FALSE(select(isa));
            EXPECT_EQ(active().isa, before);
        }
    }
}

TEST(kernels, scalar_cdotc_small_case) {
    // (1+2i)·conj(3−i) + (−1+0i)·conj(0+1i) = (1+7i) + i = 1+8i
    std::vector<double> a{1, 2, -1, 0};
    std::vector<double> b{3, -1, 0, 1};
    double out[2];
    scalar::cdotc(a.data(), b.data(), 2, out);
    EXPECT_DOUBLE_EQ(out[0], 1.0);
    EXPECT_DOUBLE_EQ(out[1], 8.0);
}

TEST(kernels, scalar_caxpy_small_case) {
    std::vector<double> x{1, 1};
    std::vector<double> y{0.5, 0};
    scalar::caxpy(0.0, 1.0, x.data(), y.data(), 1);  // y += i(1+i) = −1+i
    EXPECT_DOUBLE_EQ(y[0], -0.5);
    EXPECT_DOUBLE_EQ(y[1], 1.0);
}

TEST(kernels, simd_variants_match_scalar) {
    std::mt19937_64 rng(12345);
    for (const auto &t : available_tables()) {
        SCOPED_TRACE(std::string(isa_name(t.isa)));
        for (std::size_t len : kLengths) {
            auto a = random_complex(len, rng);
            auto b = random_complex(len, rng);

            double ref[2], got[2];
            scalar::cdotc(a.data(), b.data(), len, ref);
            t.cdotc(a.data(), b.data(), len, got);
            double scale = 1.0 + static_cast<double>(len);
            EXPECT_NEAR(got[0], ref[0], 1e-13 * scale);
            EXPECT_NEAR(got[1], ref[1], 1e-13 * scale);

            auto y_ref = b;
            auto y_got = b;
            scalar::caxpy(0.3, -1.7, a.data(), y_ref.data(), len);
            t.caxpy(0.3, -1.7, a.data(), y_got.data(), len);
            for (std::size_t i = 0; i < y_ref.size(); i++) {
                EXPECT_NEAR(y_got[i], y_ref[i], 1e-14);
            }

            EXPECT_NEAR(t.max_abs_diff(a.data(), b.data(), len), scalar::max_abs_diff(a.data(), b.data(), len),
                        1e-14);
        }
    }
}

TEST(kernels, deterministic_per_isa) {
    std::mt19937_64 rng(7);
    auto a = random_complex(777, rng);
    auto b = random_complex(777, rng);
    for (const auto &t : available_tables()) {
        double first[2], second[2];
        t.cdotc(a.data(), b.data(), 777, first);
        t.cdotc(a.data(), b.data(), 777, second);
        EXPECT_EQ(first[0], second[0]);
        EXPECT_EQ(first[1], second[1]);
    }
}

TEST(kernels, max_abs_diff_finds_single_outlier) {
    std::vector<double> a(2 * 33, 0.0);
    std::vector<double> b(2 * 33, 0.0);
    b[2 * 31] = 3.0;
    b[2 * 31 + 1] = 4.0;
    for (const auto &t : available_tables()) {
        EXPECT_DOUBLE_EQ(t.max_abs_diff(a.data(), b.data(), 33), 5.0);
    }
}
