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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace opgraph {

namespace {

std::string name_1based(const char *prefix, std::size_t zero_based) {
    return std::string(prefix) + std::to_string(zero_based + 1);
}

}  // namespace

void Section4Params::validate() const {
    auto fail = [&](const std::string &what) { throw ParameterError("invalid parameters " + str() + ": " + what); };
    if (p < 2) {
        fail("requires p >= 2");
    }
    if (y < 2) {
        fail("requires y >= 2");
    }
    if (h < 0) {
        fail("requires h >= 0");
    }
    if (d < 1 || (d < 2 && !allow_d1)) {
        fail("requires d >= 2 (a code needs dim K >= 2; d = 1 needs an explicit override)");
    }
    if ((h + 1) * (d + 1) < y) {
        fail("violates (h+1)(d+1) >= y: " + std::to_string((h + 1) * (d + 1)) + " < " + std::to_string(y));
    }
    if (y < (h + 1) * d) {
        fail("violates y >= (h+1)d: " + std::to_string(y) + " < " + std::to_string((h + 1) * d));
    }
}

std::string Section4Params::str() const {
    std::ostringstream s;
    s << "(p=" << p << ", y=" << y << ", h=" << h << ", d=" << d << ")";
    return s.str();
}

std::vector<Section4Params> enumerate_section4_params(int n_max) {
    std::vector<Section4Params> out;
    for (int p = 2; p * 2 <= n_max; p++) {
        for (int y = 2; p * y <= n_max; y++) {
            for (int h = 0; (h + 1) * 2 <= y; h++) {
                for (int d = 2; (h + 1) * d <= y; d++) {
                    Section4Params params{p, y, h, d};
                    if ((h + 1) * (d + 1) >= y) {
                        out.push_back(params);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Section4Params &a, const Section4Params &b) {
        return std::make_tuple(a.n(), a.p, a.y, a.h, a.d) < std::make_tuple(b.n(), b.p, b.y, b.h, b.d);
    });
    return out;
}

ResidueSetA::ResidueSetA(int y, int h, int d) : y_(y), h_(h), d_(d), allowed_(static_cast<std::size_t>(y), true) {
    if (y < 1 || h < 0 || d < 1) {
        throw ParameterError("residue set needs y >= 1, h >= 0, d >= 1");
    }
    auto exclude = [&](long long v) {
        long long r = v % y;
        allowed_[static_cast<std::size_t>(r < 0 ? r + y : r)] = false;
    };
    for (int j = 1; j <= d; j++) {
        exclude(static_cast<long long>(d - j) * (h + 1));
        exclude(y + static_cast<long long>(j - d) * (h + 1));
    }
}

bool ResidueSetA::allows_residue(int r) const {
    return r >= 0 && r < y_ && allowed_[static_cast<std::size_t>(r)];
}

bool ResidueSetA::contains(long long m) const {
    long long r = m % y_;
    return allowed_[static_cast<std::size_t>(r < 0 ? r + y_ : r)];
}

std::vector<int> ResidueSetA::allowed_residues() const {
    std::vector<int> out;
    for (int r = 0; r < y_; r++) {
        if (allowed_[static_cast<std::size_t>(r)]) {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<int> ResidueSetA::members(int begin, int end) const {
    std::vector<int> out;
    for (int m = begin; m < end; m++) {
        if (contains(m)) {
            out.push_back(m);
        }
    }
    return out;
}

ResidueSetA residue_set_A(int y, int h, int d) {
    return {y, h, d};
}

ComplexMatrix sigma_x() {
    return {2, 2, {0.0, 1.0, 1.0, 0.0}};
}

ComplexMatrix sigma_y() {
    const cplx i{0.0, 1.0};
    return {2, 2, {0.0, i, -i, 0.0}};
}

ComplexMatrix sigma_z() {
    return {2, 2, {1.0, 0.0, 0.0, -1.0}};
}

std::vector<ComplexVector> section2_words() {
    ComplexVector plus({1.0, 1.0});
    ComplexVector minus({1.0, -1.0});
    return {kron(ComplexVector::basis(2, 0), plus), kron(ComplexVector::basis(2, 1), minus)};
}

std::vector<ComplexMatrix> section2_errors() {
    auto id = ComplexMatrix::identity(2);
    return {kron(sigma_x(), id), kron(sigma_y(), id), kron(id, sigma_y()), kron(id, sigma_z())};
}

Construction build_section2() {
    auto graph = OperatorGraph::from_dense(section2_errors(), {"section2", {}});
    auto words = section2_words();
    return {std::move(graph), CodeSpace::from_vectors(words, {"f+", "f-"})};
}

Construction build_section2_bit_flip() {
    auto id = ComplexMatrix::identity(2);
    auto graph = OperatorGraph::from_dense({kron(id, sigma_x())}, {"section2-bit-flip", {}});
    auto e0 = ComplexVector::basis(2, 0);
    std::vector<ComplexVector> words{kron(ComplexVector::basis(2, 0), e0), kron(ComplexVector::basis(2, 1), e0)};
    return {std::move(graph), CodeSpace::from_vectors(words, {"e1(x)e1", "e2(x)e1"})};
}

std::vector<WeylLabelPair> section3_labels(int n) {
    std::vector<WeylLabelPair> out;
    auto id = WeylLabel::identity(n);
    for (int k = 0; k < n; k++) {
        WeylLabel xzk = label_mul(WeylLabel::x(n), WeylLabel::z(n, k));
        for (int s = 1; s < n; s++) {
            WeylLabel power = label_pow(xzk, static_cast<unsigned long long>(s));
            out.emplace_back(power, id);
            out.emplace_back(id, power);
        }
    }
    return out;
}

CodeSpace section3_code(int n) {
    auto basis = fourier_basis(n);
    std::vector<ComplexVector> words;
    std::vector<std::string> names;
    for (int j = 0; j < n; j++) {
        const auto &f = basis.vectors[static_cast<std::size_t>(j)];
        words.push_back(kron(f, f));
        names.push_back(name_1based("h_", static_cast<std::size_t>(j)));
    }
    return CodeSpace::from_vectors(words, std::move(names));
}

Construction build_section3(int n, bool allow_small) {
    if (n < 3 && !(allow_small && n >= 2)) {
        throw ParameterError("section3 requires n > 2 (got n=" + std::to_string(n) + ")");
    }
    auto labels = section3_labels(n);
    auto graph = graph_from_labels(n, labels, {"section3", {{"n", n}}});
    return {std::move(graph), section3_code(n)};
}

CodeSpace build_code_K1(const Section4Params &params) {
    params.validate();
    const int n = params.n();
    auto basis = fourier_basis(n);
    const std::size_t dim = static_cast<std::size_t>(n) * n;

    // χ: indicator of the order-p subgroup {0, y, 2y, ...} of Z_n.
    ComplexVector q(dim);
    for (int j = 0; j < n; j++) {
        if (j % params.y == 0) {
            const auto &f = basis.vectors[static_cast<std::size_t>(j)];
            q += kron(f, f);
        }
    }
    q *= 1.0 / std::sqrt(static_cast<double>(params.p));

    ComplexMatrix step = weyl_dense(WeylLabel::x(n, params.h + 1));
    std::vector<ComplexVector> words{q};
    std::vector<std::string> names{"q_1"};
    for (int k = 1; k < params.d; k++) {
        words.push_back(kron_apply(step, step, words.back()));
        names.push_back(name_1based("q_", static_cast<std::size_t>(k)));
    }
    return CodeSpace::from_vectors(words, std::move(names));
}

std::vector<WeylLabelPair> family_A(int n) {
    std::vector<WeylLabelPair> out;
    for (int m = 0; m < n; m++) {
        for (int j = 0; j < n; j++) {
            if (m == j) {
                continue;
            }
            for (int k = 0; k < n; k++) {
                for (int s = 0; s < n; s++) {
                    out.emplace_back(WeylLabel(n, m, k), WeylLabel(n, j, s));
                }
            }
        }
    }
    return out;
}

std::vector<WeylLabelPair> family_B(const Section4Params &params) {
    params.validate();
    const int n = params.n();
    auto a = residue_set_A(params.y, params.h, params.d);
    std::vector<WeylLabelPair> out;
    for (int m = 0; m < n; m++) {
        if (!a.contains(m)) {
            continue;
        }
        for (int k = 0; k < n; k++) {
            for (int s = 0; s < n; s++) {
                out.emplace_back(WeylLabel(n, m, k), WeylLabel(n, m, s));
            }
        }
    }
    return out;
}

std::vector<WeylLabelPair> family_C(const Section4Params &params) {
    params.validate();
    const int n = params.n();
    std::vector<WeylLabelPair> out;
    for (int m = 0; m < n; m++) {
        for (int k = 0; k < n; k++) {
            for (int s = 0; s < n; s++) {
                if ((k + s) % params.p != 0) {
                    out.emplace_back(WeylLabel(n, m, k), WeylLabel(n, m, s));
                }
            }
        }
    }
    return out;
}

namespace {

GraphInfo section4_info(const char *name, const Section4Params &params) {
    return {name, {{"p", params.p}, {"y", params.y}, {"h", params.h}, {"d", params.d}, {"n", params.n()}}};
}

}  // namespace

Construction build_section4(const Section4Params &params) {
    params.validate();
    const int n = params.n();
    std::vector<WeylLabelPair> labels = family_A(n);
    for (auto &&family : {family_B(params), family_C(params), section3_labels(n)}) {
        labels.insert(labels.end(), family.begin(), family.end());
    }
    auto graph = graph_from_labels(n, labels, section4_info("section4", params));
    return {std::move(graph), build_code_K1(params)};
}

Construction build_remark2(const Section4Params &params) {
    params.validate();
    const int n = params.n();
    auto graph = graph_from_labels(n, family_A(n), section4_info("remark2", params));
    return {std::move(graph), section3_code(n)};
}

double Section4ProofChecks::worst() const {
    return std::max({shifted_overlap, phase_overlap, period_defect});
}

Section4ProofChecks section4_proof_checks(const Section4Params &params) {
    params.validate();
    const int n = params.n();
    CodeSpace code = build_code_K1(params);
    std::vector<ComplexVector> q;
    for (std::size_t k = 0; k < code.code_dim(); k++) {
        q.push_back(code.word(k));
    }
    const auto id = ComplexMatrix::identity(static_cast<std::size_t>(n));
    Section4ProofChecks r;

    for (int m : residue_set_A(params.y, params.h, params.d).members(1, n)) {
        ComplexMatrix shift = weyl_dense(WeylLabel::x(n, m));
        for (const auto &qk : q) {
            ComplexVector moved = kron_apply(shift, shift, qk);
            for (const auto &qj : q) {
                r.shifted_overlap = std::max(r.shifted_overlap, std::abs(inner(moved, qj)));
            }
        }
        r.shifts_checked++;
    }

    // k + s ranges over [0, 2n−2] for exponents k, s in [0, n).
    for (int total = 0; total <= 2 * n - 2; total++) {
        if (total % params.p == 0) {
            continue;
        }
        ComplexMatrix zr = weyl_dense(WeylLabel::z(n, total));
        ComplexVector moved = kron_apply(id, zr, q[0]);
        r.phase_overlap = std::max(r.phase_overlap, std::abs(inner(moved, q[0])));
    }

    ComplexMatrix period = weyl_dense(WeylLabel::x(n, params.y));
    for (const auto &qk : q) {
        r.period_defect = std::max(r.period_defect, max_abs_diff(kron_apply(period, period, qk), qk));
    }
    return r;
}

std::int64_t predicted_thm2(int n) {
    return 2LL * n * (n - 1) + 1;
}

PredictedDims predicted_dims(const Section4Params &params) {
    params.validate();
    PredictedDims out;
    const std::int64_t n = params.n();
    const std::int64_t p = params.p;
    const std::int64_t y = params.y;
    out.n = params.n();
    out.thm2 = predicted_thm2(params.n());
    out.a_prime = static_cast<int>(residue_set_A(params.y, params.h, params.d).members(1, params.n()).size());
    out.r_a = params.n() - out.a_prime;
    // Both numerators are even: (p−1)(p+2) = p²+p−2 and n(y−1) = p·y(y−1).
    std::int64_t per_residue = y * (p - 1) * (p + 2) / 2 + n * (y - 1) / 2;
    out.thm4 = n * n * n * (n - 1) + out.a_prime * n * n + out.r_a * per_residue + 1;
    return out;
}

BaselineBounds baseline_bounds(std::int64_t dim_h, std::int64_t dim_k) {
    if (dim_k < 2) {
        throw ParameterError("baseline bounds need dim K >= 2 (the commutative bound divides by dim K - 1)");
    }
    if (dim_h < dim_k) {
        throw ParameterError("baseline bounds need dim H >= dim K");
    }
    BaselineBounds b;
    while ((b.knill_max + 1) * (b.knill_max + 2) * dim_k <= dim_h) {
        b.knill_max++;
    }
    b.commutative_max = (dim_h - dim_k) / (dim_k - 1);
    return b;
}

}  // namespace opgraph
