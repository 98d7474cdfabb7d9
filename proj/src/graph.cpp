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

#include "opgraph/graph.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "opgraph/kernels.hpp"

namespace opgraph {

OperatorGraph OperatorGraph::from_dense(std::vector<ComplexMatrix> generators, GraphInfo info, const Tolerance &tol) {
    if (generators.empty()) {
        throw DimensionError("from_dense needs at least one generator to fix the space dimension");
    }
    const std::size_t dim = generators[0].rows();
    for (const auto &m : generators) {
        if (!m.is_square() || m.rows() != dim) {
            throw DimensionError("graph generators must be square with equal dimension, got " +
                                 shape_string(generators[0]) + " and " + shape_string(m));
        }
    }
    OperatorGraph g;
    g.space_dim_ = dim;
    g.info_ = std::move(info);
    g.dense_.push_back(ComplexMatrix::identity(dim));
    std::vector<ComplexMatrix> adjoints;
    for (auto &m : generators) {
        ComplexMatrix a = adjoint(m);
        if (max_abs_diff(a, m) >= tol.absolute) {
            adjoints.push_back(std::move(a));
        }
        g.dense_.push_back(std::move(m));
    }
    for (auto &a : adjoints) {
        g.dense_.push_back(std::move(a));
    }
    return g;
}

std::size_t OperatorGraph::size() const {
    return labels_ ? labels_->size() : dense_.size();
}

const std::vector<WeylLabelPair> &OperatorGraph::labels() const {
    if (!labels_) {
        throw std::logic_error("graph '" + info_.construction + "' has no Weyl labels");
    }
    return *labels_;
}

ComplexMatrix OperatorGraph::dense(std::size_t index) const {
    if (labels_) {
        return table_->dense(labels_->at(index));
    }
    return dense_.at(index);
}

std::vector<ComplexMatrix> OperatorGraph::dense_all() const {
    std::vector<ComplexMatrix> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); i++) {
        out.push_back(dense(i));
    }
    return out;
}

std::string OperatorGraph::generator_name(std::size_t index) const {
    if (labels_) {
        return labels_->at(index).str();
    }
    return index == 0 ? "I" : "G" + std::to_string(index);
}

OperatorGraph graph_from_labels(int n, std::span<const WeylLabelPair> pairs, GraphInfo info) {
    if (n < 1) {
        throw std::invalid_argument("graph_from_labels needs n >= 1");
    }
    for (const auto &p : pairs) {
        if (p.n() != n) {
            throw std::invalid_argument("graph_from_labels: label over n=" + std::to_string(p.n()) +
                                        " in a graph over n=" + std::to_string(n));
        }
    }
    std::vector<WeylLabelPair> out;
    std::unordered_set<std::uint64_t> seen;
    auto add = [&](const WeylLabelPair &p) {
        if (seen.insert(p.span_key()).second) {
            out.push_back(p);
        }
    };
    add({WeylLabel::identity(n), WeylLabel::identity(n)});
    for (const auto &p : pairs) {
        add(p);
    }
    for (const auto &p : pairs) {
        add(label_adjoint(p));
    }
    std::sort(out.begin(), out.end(),
              [](const WeylLabelPair &a, const WeylLabelPair &b) { return a.span_key() < b.span_key(); });

    OperatorGraph g;
    g.space_dim_ = static_cast<std::size_t>(n) * n;
    g.label_n_ = n;
    g.labels_ = std::move(out);
    g.table_ = std::make_shared<const WeylTable>(n);
    g.info_ = std::move(info);
    return g;
}

CodeSpace CodeSpace::from_vectors(std::span<const ComplexVector> vectors, std::vector<std::string> names,
                                  const Tolerance &tol) {
    if (vectors.empty()) {
        throw DimensionError("a code space needs at least one vector");
    }
    auto basis = orthonormalize(vectors, tol);
    if (basis.size() != vectors.size()) {
        throw DimensionError("code vectors are linearly dependent (" + std::to_string(vectors.size()) + " given, " +
                             std::to_string(basis.size()) + " independent)");
    }
    return from_isometry(ComplexMatrix::from_columns(basis), std::move(names), tol);
}

CodeSpace CodeSpace::from_isometry(ComplexMatrix isometry, std::vector<std::string> names, const Tolerance &tol) {
    if (isometry.cols() == 0 || isometry.rows() < isometry.cols()) {
        throw DimensionError("isometry must be tall with at least one column, got " + shape_string(isometry));
    }
    double err = max_abs_diff(matmul(adjoint(isometry), isometry), ComplexMatrix::identity(isometry.cols()));
    if (err >= tol.absolute) {
        throw DimensionError("columns are not orthonormal (max deviation " + std::to_string(err) + ")");
    }
    if (names.empty()) {
        for (std::size_t j = 0; j < isometry.cols(); j++) {
            names.push_back("w_" + std::to_string(j + 1));
        }
    }
    if (names.size() != isometry.cols()) {
        throw DimensionError("one name per code word required");
    }
    CodeSpace c;
    c.isometry_ = std::move(isometry);
    c.names_ = std::move(names);
    return c;
}

CodeSpace CodeSpace::rotated(const ComplexMatrix &unitary, const Tolerance &tol) const {
    if (!unitary.is_square() || unitary.rows() != code_dim()) {
        throw DimensionError("rotation must be code_dim x code_dim");
    }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < code_dim(); j++) {
        names.push_back("r_" + std::to_string(j + 1));
    }
    return from_isometry(matmul(isometry_, unitary), std::move(names), tol);
}

DimResult graph_dim(const OperatorGraph &g, DimMethod method, const Tolerance &tol) {
    DimResult r;
    if (method == DimMethod::labels || method == DimMethod::both) {
        const auto &labels = g.labels();
        std::unordered_set<std::uint64_t> keys;
        for (const auto &p : labels) {
            keys.insert(p.span_key());
        }
        r.labels = keys.size();
    }
    if (method == DimMethod::gram || method == DimMethod::both) {
        auto ops = g.dense_all();
        r.gram = gram_rank(ops, tol);
    }
    if (r.labels && r.gram) {
        r.agree = *r.labels == *r.gram;
    }
    return r;
}

SubsampleResult gram_subsample(const OperatorGraph &g, std::size_t size, std::uint64_t seed, const Tolerance &tol) {
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> picked;
    if (size >= all.size()) {
        picked = all;
    } else {
        std::mt19937_64 rng(seed);
        std::sample(all.begin(), all.end(), std::back_inserter(picked), size, rng);
    }
    SubsampleResult r;
    r.size = picked.size();
    std::vector<ComplexMatrix> ops;
    ops.reserve(picked.size());
    std::unordered_set<std::uint64_t> keys;
    for (std::size_t i : picked) {
        ops.push_back(g.dense(i));
        if (g.has_labels()) {
            keys.insert(g.labels()[i].span_key());
        }
    }
    r.distinct_labels = g.has_labels() ? keys.size() : picked.size();
    r.gram_rank = gram_rank(ops, tol);
    return r;
}

namespace {

// For A⊗B with code words S_j ↔ n×n matrices M_j (row-major reshape):
//     <S_j, (A⊗B) S_c> = tr(M_j† A M_c Bᵀ) = sum conj(A†M_j) ∘ (M_c Bᵀ),
// so each compressed entry is one length-n² dot product once A†M_j and M_c Bᵀ
// are tabulated for every base operator.
std::vector<ComplexMatrix> compress_labels(const OperatorGraph &g, const CodeSpace &code) {
    const int n = g.label_n();
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t d = code.code_dim();
    WeylTable table(n);

    std::vector<ComplexMatrix> words;
    for (std::size_t j = 0; j < d; j++) {
        ComplexVector w = code.word(j);
        words.emplace_back(nn, nn, std::vector<cplx>(w.entries().begin(), w.entries().end()));
    }
    const std::size_t bases = nn * nn;
    std::vector<ComplexMatrix> left(bases * d);
    std::vector<ComplexMatrix> right(bases * d);
    for (int kx = 0; kx < n; kx++) {
        for (int kz = 0; kz < n; kz++) {
            std::size_t b = static_cast<std::size_t>(kx * n + kz);
            ComplexMatrix a_dag = adjoint(table.base(kx, kz));
            ComplexMatrix b_t = transpose(table.base(kx, kz));
            for (std::size_t j = 0; j < d; j++) {
                left[b * d + j] = matmul(a_dag, words[j]);
                right[b * d + j] = matmul(words[j], b_t);
            }
        }
    }

    const auto &k = kernels::active();
    std::vector<ComplexMatrix> out;
    out.reserve(g.size());
    for (const auto &p : g.labels()) {
        std::size_t lb = static_cast<std::size_t>(p.left.kx() * n + p.left.kz());
        std::size_t rb = static_cast<std::size_t>(p.right.kx() * n + p.right.kz());
        cplx phase = root_of_unity(n, p.total_phase());
        ComplexMatrix c(d, d);
        for (std::size_t j = 0; j < d; j++) {
            for (std::size_t col = 0; col < d; col++) {
                double v[2];
                k.cdotc(right[rb * d + col].raw(), left[lb * d + j].raw(), bases, v);
                c(j, col) = phase * cplx{v[0], v[1]};
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

void require_compatible(const OperatorGraph &g, const CodeSpace &code) {
    if (g.space_dim() != code.space_dim()) {
        throw DimensionError("graph acts on dimension " + std::to_string(g.space_dim()) + " but the code lives in " +
                             std::to_string(code.space_dim()));
    }
}

}  // namespace

std::vector<ComplexMatrix> compress(const OperatorGraph &g, const CodeSpace &code) {
    require_compatible(g, code);
    if (g.has_labels()) {
        return compress_labels(g, code);
    }
    const ComplexMatrix &s = code.isometry();
    ComplexMatrix s_dag = adjoint(s);
    std::vector<ComplexMatrix> out;
    out.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); i++) {
        out.push_back(matmul(s_dag, matmul(g.dense(i), s)));
    }
    return out;
}

CompressionReport is_anticlique(const OperatorGraph &g, const CodeSpace &code, const Tolerance &tol) {
    auto blocks = compress(g, code);
    CompressionReport r;
    r.compressed_dim = gram_rank(blocks, tol);
    const std::size_t d = code.code_dim();
    for (const auto &b : blocks) {
        cplx c = b.trace() / static_cast<double>(d);
        r.c_values.push_back(c);
        r.residual = std::max(r.residual, max_abs_diff(b, c * ComplexMatrix::identity(d)));
    }
    r.verdict = r.compressed_dim == 1;
    return r;
}

double KlTable::max_off_diagonal() const {
    double best = 0.0;
    for (const auto &m : entries) {
        for (std::size_t j = 0; j < m.rows(); j++) {
            for (std::size_t k = 0; k < m.cols(); k++) {
                if (j != k) {
                    best = std::max(best, std::abs(m(j, k)));
                }
            }
        }
    }
    return best;
}

double KlTable::max_diagonal_spread() const {
    double best = 0.0;
    for (const auto &m : entries) {
        for (std::size_t j = 1; j < m.rows(); j++) {
            best = std::max(best, std::abs(m(j, j) - m(0, 0)));
        }
    }
    return best;
}

KlTable kl_table(const OperatorGraph &g, const CodeSpace &code) {
    return {compress(g, code)};
}

}  // namespace opgraph
