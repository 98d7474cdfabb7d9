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

#include "opgraph/constructions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

using namespace opgraph;

namespace {

std::size_t distinct_labels(int n, const std::vector<WeylLabelPair> &pairs) {
    std::set<std::uint64_t> keys;
    for (const auto &p : pairs) {
        keys.insert(p.span_key());
    }
    return keys.size();
}

// Independent Fourier vector, straight from the Hadamard matrix definition.
ComplexVector hadamard_column(int n, int j) {
    ComplexVector v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; k++) {
        double angle = 2.0 * M_PI * j * k / n;
        v[static_cast<std::size_t>(k)] = cplx(std::cos(angle), std::sin(angle)) / std::sqrt(double(n));
    }
    return v;
}

}  // namespace

TEST(section2, pauli_matrices) {
    EXPECT_EQ(sigma_x()(0, 1), cplx(1.0));
    EXPECT_EQ(sigma_y()(0, 1), cplx(0.0, 1.0));
    EXPECT_EQ(sigma_y()(1, 0), cplx(0.0, -1.0));
    EXPECT_EQ(sigma_z()(1, 1), cplx(-1.0));
}

TEST(section2, all_sixteen_overlaps_vanish) {
    auto words = section2_words();
    auto errors = section2_errors();
    ASSERT_EQ(words.size(), 2u);
    ASSERT_EQ(errors.size(), 4u);
    EXPECT_EQ(words[0][0], cplx(1.0));
    EXPECT_EQ(words[0][1], cplx(1.0));
    EXPECT_EQ(words[1][2], cplx(1.0));
    EXPECT_EQ(words[1][3], cplx(-1.0));
    int checked = 0;
    for (const auto &x : errors) {
        for (const auto &a : words) {
            for (const auto &b : words) {
                EXPECT_LT(std::abs(inner(a, apply(x, b))), 1e-15);
                checked++;
            }
        }
    }
    EXPECT_EQ(checked, 16);
}

TEST(section2, graph_and_code) {
    auto c = build_section2();
    EXPECT_EQ(c.graph.space_dim(), 4u);
    EXPECT_EQ(c.code.code_dim(), 2u);
    EXPECT_EQ(*graph_dim(c.graph, DimMethod::gram).gram, 5u);
    EXPECT_TRUE(is_anticlique(c.graph, c.code).verdict);

    auto flip = build_section2_bit_flip();
    EXPECT_EQ(*graph_dim(flip.graph, DimMethod::gram).gram, 2u);
    EXPECT_EQ(flip.code.code_dim(), 2u);
}

TEST(section3, code_words_are_fourier_products) {
    for (int n = 3; n <= 6; n++) {
        auto code = section3_code(n);
        ASSERT_EQ(code.code_dim(), static_cast<std::size_t>(n));
        for (int j = 0; j < n; j++) {
            auto h = kron(hadamard_column(n, j), hadamard_column(n, j));
            EXPECT_LT(max_abs_diff(code.word(static_cast<std::size_t>(j)), h), 1e-12);
        }
        EXPECT_EQ(code.names()[0], "h_1");
    }
}

TEST(section3, u_and_v_powers_never_reach_the_code) {
    for (int n = 3; n <= 6; n++) {
        WeylTable table(n);
        auto code = section3_code(n);
        auto id = WeylLabel::identity(n);
        double worst = 0.0;
        for (int k = 0; k < n; k++) {
            auto xzk = label_mul(WeylLabel::x(n), WeylLabel::z(n, k));
            for (int s = 1; s < n; s++) {
                auto power = label_pow(xzk, static_cast<unsigned long long>(s));
                for (const auto &pair : {WeylLabelPair(power, id), WeylLabelPair(id, power)}) {
                    auto op = table.dense(pair);
                    for (int j = 0; j < n; j++) {
                        for (int m = 0; m < n; m++) {
                            auto hm = apply(op, code.word(static_cast<std::size_t>(m)));
                            worst = std::max(worst, std::abs(inner(code.word(static_cast<std::size_t>(j)), hm)));
                        }
                    }
                }
            }
        }
        EXPECT_LT(worst, 1e-12) << "n=" << n;
    }
}

TEST(section3, anticlique_for_small_n) {
    for (int n = 3; n <= 8; n++) {
        auto c = build_section3(n);
        auto r = is_anticlique(c.graph, c.code);
        EXPECT_TRUE(r.verdict) << "n=" << n;
        EXPECT_LT(r.residual, 1e-12);
    }
}

TEST(section3, label_count_matches_gcd_sum) {
    for (int n = 3; n <= 10; n++) {
        std::size_t expected = 1;
        for (int s = 1; s < n; s++) {
            expected += 2 * static_cast<std::size_t>(n / std::gcd(n, s));
        }
        auto c = build_section3(n);
        EXPECT_EQ(c.graph.size(), expected) << "n=" << n;
    }
}

TEST(section3, small_n_needs_override) {
    EXPECT_THROW(build_section3(2), std::invalid_argument);
    EXPECT_THROW(build_section3(1), std::invalid_argument);
    auto c = build_section3(2, true);
    EXPECT_EQ(c.code.code_dim(), 2u);
}

TEST(section3, predicted_formula) {
    EXPECT_EQ(predicted_thm2(3), 13);
    EXPECT_EQ(predicted_thm2(4), 25);
    EXPECT_EQ(predicted_thm2(5), 41);
    EXPECT_EQ(predicted_thm2(6), 61);
}

TEST(section4, residue_examples) {
    EXPECT_EQ(residue_set_A(4, 1, 2).allowed_residues(), (std::vector<int>{1, 3}));
    EXPECT_TRUE(residue_set_A(2, 0, 2).allowed_residues().empty());
    EXPECT_EQ(residue_set_A(4, 1, 2).members(1, 8), (std::vector<int>{1, 3, 5, 7}));
    EXPECT_TRUE(residue_set_A(4, 1, 2).contains(13));
    EXPECT_FALSE(residue_set_A(4, 1, 2).contains(6));
}

TEST(section4, zero_residue_always_excluded) {
    for (const auto &params : enumerate_section4_params(16)) {
        EXPECT_FALSE(residue_set_A(params.y, params.h, params.d).allows_residue(0)) << params.str();
    }
}

TEST(section4, k1_example_supports) {
    Section4Params params{2, 4, 1, 2};
    auto code = build_code_K1(params);
    ASSERT_EQ(code.code_dim(), 2u);
    EXPECT_EQ(code.names()[1], "q_2");
    const std::set<int> support[2] = {{0, 4}, {2, 6}};
    for (std::size_t k = 0; k < 2; k++) {
        for (int j = 0; j < 8; j++) {
            auto fjj = kron(hadamard_column(8, j), hadamard_column(8, j));
            double overlap = std::abs(inner(fjj, code.word(k)));
            double expected = support[k].count(j) ? 1.0 / std::sqrt(2.0) : 0.0;
            EXPECT_NEAR(overlap, expected, 1e-12) << "q_" << k + 1 << " j=" << j;
        }
    }
}

TEST(section4, k1_orthonormal_and_periodic) {
    for (const auto &params : enumerate_section4_params(12)) {
        auto code = build_code_K1(params);
        ASSERT_EQ(code.code_dim(), static_cast<std::size_t>(params.d));
        for (std::size_t a = 0; a < code.code_dim(); a++) {
            for (std::size_t b = 0; b < code.code_dim(); b++) {
                EXPECT_NEAR(std::abs(inner(code.word(a) , code.word(b))), a == b ? 1.0 : 0.0, 1e-12);
            }
        }
        auto shift = kron(weyl_dense(WeylLabel::x(params.n(), params.y)), weyl_dense(WeylLabel::x(params.n(), params.y)));
        EXPECT_LT(max_abs_diff(apply(shift, code.word(0)), code.word(0)), 1e-12) << params.str();
        EXPECT_LT(section4_proof_checks(params).worst(), 1e-12) << params.str();
    }
}

TEST(section4, family_sizes_at_reference_point) {
    Section4Params params{2, 4, 1, 2};
    const int n = 8;
    EXPECT_EQ(distinct_labels(n, family_A(n)), 3584u);
    EXPECT_EQ(distinct_labels(n, family_B(params)), 256u);
    EXPECT_EQ(distinct_labels(n, family_C(params)), 256u);
    auto c = build_section4(params);
    EXPECT_EQ(c.graph.size(), 3969u);
    EXPECT_EQ(*graph_dim(c.graph, DimMethod::labels).labels, 3969u);
}

TEST(section4, families_respect_their_index_rules) {
    Section4Params params{2, 4, 1, 2};
    auto a = residue_set_A(params.y, params.h, params.d);
    for (const auto &l : family_A(8)) {
        EXPECT_NE(l.left.kx(), l.right.kx());
    }
    for (const auto &l : family_B(params)) {
        EXPECT_EQ(l.left.kx(), l.right.kx());
        EXPECT_TRUE(a.contains(l.left.kx()));
    }
    for (const auto &l : family_C(params)) {
        EXPECT_EQ(l.left.kx(), l.right.kx());
        EXPECT_NE((l.left.kz() + l.right.kz()) % params.p, 0);
    }
}

TEST(section4, reference_point_is_anticlique) {
    auto c = build_section4({2, 4, 1, 2});
    auto r = is_anticlique(c.graph, c.code);
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.compressed_dim, 1u);
    EXPECT_LT(r.residual, 1e-12);
}

TEST(section4, remark2_graph) {
    Section4Params params{2, 3, 0, 2};
    auto c = build_remark2(params);
    const std::size_t n = 6;
    EXPECT_EQ(c.graph.size(), n * n * n * (n - 1) + 1);
    EXPECT_EQ(c.code.code_dim(), n);
    EXPECT_TRUE(is_anticlique(c.graph, c.code).verdict);
}

TEST(section4, graph_contains_section3_graph) {
    for (const auto &params : enumerate_section4_params(8)) {
        auto small = build_section3(params.n());
        auto big = build_section4(params);
        std::set<std::uint64_t> keys;
        for (const auto &l : big.graph.labels()) {
            keys.insert(l.span_key());
        }
        for (const auto &l : small.graph.labels()) {
            EXPECT_TRUE(keys.count(l.span_key())) << params.str() << " missing " << l.str();
        }
    }
}

TEST(section4, predicted_dims) {
    auto d = predicted_dims({2, 4, 1, 2});
    EXPECT_EQ(d.n, 8);
    EXPECT_EQ(d.a_prime, 4);
    EXPECT_EQ(d.r_a, 4);
    EXPECT_EQ(d.thm4, 3921);
    EXPECT_EQ(d.thm2, predicted_thm2(8));
}

TEST(section4, parameter_validation) {
    EXPECT_NO_THROW((Section4Params{2, 4, 1, 2}.validate()));
    EXPECT_THROW((Section4Params{1, 4, 1, 2}.validate()), ParameterError);
    EXPECT_THROW((Section4Params{2, 1, 0, 2}.validate()), ParameterError);
    EXPECT_THROW((Section4Params{2, 4, 2, 2}.validate()), ParameterError);   // y < (h+1)d
    EXPECT_THROW((Section4Params{2, 8, 0, 2}.validate()), ParameterError);   // (h+1)(d+1) < y
    EXPECT_THROW((Section4Params{2, 2, 0, 1}.validate()), ParameterError);
    EXPECT_NO_THROW((Section4Params{2, 2, 0, 1, true}.validate()));
    try {
        Section4Params{2, 8, 0, 2}.validate();
    } catch (const ParameterError &e) {
        EXPECT_NE(std::string(e.what()).find("(h+1)(d+1) >= y"), std::string::npos);
    }
    EXPECT_THROW(build_section4({2, 4, 2, 2}), ParameterError);
}

TEST(section4, enumeration) {
    auto all = enumerate_section4_params(12);
    EXPECT_EQ(all.size(), 25u);
    for (const auto &p : all) {
        EXPECT_NO_THROW(p.validate());
        EXPECT_LE(p.n(), 12);
    }
    for (std::size_t i = 1; i < all.size(); i++) {
        EXPECT_LE(all[i - 1].n(), all[i].n());
    }
    EXPECT_TRUE(enumerate_section4_params(3).empty());
    EXPECT_EQ(enumerate_section4_params(4).size(), 1u);
}

TEST(baselines, examples) {
    auto b = baseline_bounds(16, 2);
    EXPECT_EQ(b.knill_max, 2);
    EXPECT_EQ(b.commutative_max, 14);
    b = baseline_bounds(81, 3);
    EXPECT_EQ(b.knill_max, 4);
    EXPECT_EQ(b.commutative_max, 39);
    b = baseline_bounds(4, 2);
    EXPECT_EQ(b.knill_max, 1);
    EXPECT_EQ(b.commutative_max, 2);
    EXPECT_THROW(baseline_bounds(4, 1), ParameterError);
    EXPECT_THROW(baseline_bounds(2, 3), ParameterError);
}

TEST(baselines, knill_bound_is_tight) {
    for (std::int64_t h = 4; h <= 200; h += 7) {
        for (std::int64_t k = 2; k <= h; k += 3) {
            auto v = baseline_bounds(h, k).knill_max;
            EXPECT_LE(v * (v + 1) * k, h);
            EXPECT_GT((v + 1) * (v + 2) * k, h);
        }
    }
}
