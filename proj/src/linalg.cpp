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

#include "opgraph/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "opgraph/kernels.hpp"

namespace opgraph {

void Tolerance::validate() const {
    if (!(absolute > 0.0) || !(relative > 0.0) || !std::isfinite(absolute) || !std::isfinite(relative)) {
        throw std::invalid_argument("tolerances must be strictly positive and finite");
    }
}

ComplexVector::ComplexVector(std::size_t dim) : entries_(dim) {
}

ComplexVector::ComplexVector(std::vector<cplx> entries) : entries_(std::move(entries)) {
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis index out of range");
    }
    ComplexVector v(dim);
    v[index] = 1.0;
    return v;
}

double ComplexVector::norm() const {
    double out[2];
    kernels::active().cdotc(raw(), raw(), dim(), out);
    return std::sqrt(out[0]);
}

ComplexVector &ComplexVector::operator+=(const ComplexVector &other) {
    if (other.dim() != dim()) {
        throw DimensionError("vector dimension mismatch in +=");
    }
    kernels::active().caxpy(1.0, 0.0, other.raw(), raw(), dim());
    return *this;
}

ComplexVector &ComplexVector::operator*=(cplx scalar) {
    for (auto &e : entries_) {
        e *= scalar;
    }
    return *this;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DimensionError("entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
    if (columns.empty()) {
        return {};
    }
    std::size_t rows = columns[0].dim();
    ComplexMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); c++) {
        if (columns[c].dim() != rows) {
            throw DimensionError("columns have unequal dimension");
        }
        for (std::size_t r = 0; r < rows; r++) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    ComplexVector v(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        v[r] = (*this)(r, c);
    }
    return v;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t k = 0; k < std::min(rows_, cols_); k++) {
        t += (*this)(k, k);
    }
    return t;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scalar) {
    for (auto &e : entries_) {
        e *= scalar;
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) {
        throw DimensionError("matrix shape mismatch in +=: " + shape_string(*this) + " vs " + shape_string(other));
    }
    kernels::active().caxpy(1.0, 0.0, other.raw(), raw(), entries_.size());
    return *this;
}

ComplexMatrix adjoint(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out(c, r) = m(r, c);
        }
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul shape mismatch: " + shape_string(a) + " * " + shape_string(b));
    }
    const auto &k = kernels::active();
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        double *dst = out.row_raw(i);
        for (std::size_t j = 0; j < a.cols(); j++) {
            cplx alpha = a(i, j);
            if (alpha != 0.0) {
                k.caxpy(alpha.real(), alpha.imag(), b.row_raw(j), dst, b.cols());
            }
        }
    }
    return out;
}

ComplexVector apply(const ComplexMatrix &m, const ComplexVector &v) {
    if (m.cols() != v.dim()) {
        throw DimensionError("apply shape mismatch: " + shape_string(m) + " on vector of dim " + std::to_string(v.dim()));
    }
    ComplexVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        cplx acc = 0.0;
        for (std::size_t c = 0; c < m.cols(); c++) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix m) {
    m *= scalar;
    return m;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a += -1.0 * b;
    return a;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            cplx s = a(ar, ac);
            if (s == 0.0) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

ComplexVector kron_apply(const ComplexMatrix &a, const ComplexMatrix &b, const ComplexVector &v) {
    if (a.cols() * b.cols() != v.dim()) {
        throw DimensionError("kron_apply: vector dim does not match a.cols*b.cols");
    }
    ComplexMatrix m(a.cols(), b.cols(), std::vector<cplx>(v.entries().begin(), v.entries().end()));
    ComplexMatrix r = matmul(matmul(a, m), transpose(b));
    return ComplexVector(std::vector<cplx>(r.entries().begin(), r.entries().end()));
}

cplx inner(const ComplexVector &u, const ComplexVector &v) {
    if (u.dim() != v.dim()) {
        throw DimensionError("inner product dimension mismatch");
    }
    double out[2];
    kernels::active().cdotc(v.raw(), u.raw(), v.dim(), out);
    return {out[0], out[1]};
}

cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw DimensionError("hs_inner needs equal square shapes, got " + shape_string(a) + " and " + shape_string(b));
    }
    double out[2];
    kernels::active().cdotc(a.raw(), b.raw(), a.entries().size(), out);
    return {out[0], out[1]};
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff shape mismatch: " + shape_string(a) + " vs " + shape_string(b));
    }
    return kernels::active().max_abs_diff(a.raw(), b.raw(), a.entries().size());
}

double max_abs_diff(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("max_abs_diff dimension mismatch");
    }
    return kernels::active().max_abs_diff(a.raw(), b.raw(), a.dim());
}

double max_abs(const ComplexMatrix &m) {
    double best = 0.0;
    for (const auto &e : m.entries()) {
        best = std::max(best, std::abs(e));
    }
    return best;
}

bool is_unitary(const ComplexMatrix &m, const Tolerance &tol) {
    if (!m.is_square()) {
        return false;
    }
    return max_abs_diff(matmul(m, adjoint(m)), ComplexMatrix::identity(m.rows())) < tol.absolute;
}

namespace {

// rows[a] are interleaved complex arrays of length `len`; fills the Hermitian
// matrix G[a][b] = sum rows[a] * conj(rows[b]). Each entry is one kernel call,
// so the result does not depend on how rows are split across threads.
ComplexMatrix hermitian_products(const std::vector<const double *> &rows, std::size_t len) {
    const std::size_t count = rows.size();
    ComplexMatrix g(count, count);
    const auto &k = kernels::active();
    auto fill_rows = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t a = begin; a < count; a += stride) {
            for (std::size_t b = a; b < count; b++) {
                double out[2];
                k.cdotc(rows[a], rows[b], len, out);
                g(a, b) = {out[0], out[1]};
                g(b, a) = {out[0], -out[1]};
            }
        }
    };
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1 || count * count * len < (1u << 22)) {
        fill_rows(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; w++) {
            pool.emplace_back(fill_rows, w, workers);
        }
    }
    for (std::size_t a = 0; a < count; a++) {
        g(a, a) = {g(a, a).real(), 0.0};
    }
    return g;
}

void require_same_square(std::span<const ComplexMatrix> ops) {
    for (const auto &op : ops) {
        if (!op.is_square() || op.rows() != ops[0].rows()) {
            throw DimensionError("operators must be square with equal dimension, got " + shape_string(ops[0]) +
                                 " and " + shape_string(op));
        }
    }
}

}  // namespace

ComplexMatrix gram_matrix(std::span<const ComplexMatrix> ops) {
    if (ops.empty()) {
        return {};
    }
    require_same_square(ops);
    std::vector<const double *> rows;
    rows.reserve(ops.size());
    for (const auto &op : ops) {
        rows.push_back(op.raw());
    }
    return hermitian_products(rows, ops[0].entries().size());
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h) {
    if (!h.is_square()) {
        throw DimensionError("hermitian_eigenvalues needs a square matrix, got " + shape_string(h));
    }
    const auto n = static_cast<Eigen::Index>(h.rows());
    if (n == 0) {
        return {};
    }
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; r++) {
        for (Eigen::Index c = 0; c < n; c++) {
            m(r, c) = h(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver did not converge");
    }
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::size_t gram_rank(std::span<const ComplexMatrix> ops, const Tolerance &tol) {
    if (ops.empty()) {
        return 0;
    }
    require_same_square(ops);
    const std::size_t count = ops.size();
    const std::size_t entries = ops[0].entries().size();

    ComplexMatrix g;
    if (count <= entries) {
        g = gram_matrix(ops);
    } else {
        // Entry Gram: rows indexed by matrix entry, running over operators.
        std::vector<cplx> by_entry(entries * count);
        for (std::size_t a = 0; a < count; a++) {
            auto e = ops[a].entries();
            for (std::size_t i = 0; i < entries; i++) {
                by_entry[i * count + a] = e[i];
            }
        }
        std::vector<const double *> rows(entries);
        for (std::size_t i = 0; i < entries; i++) {
            rows[i] = reinterpret_cast<const double *>(by_entry.data() + i * count);
        }
        g = hermitian_products(rows, count);
    }

    auto eig = hermitian_eigenvalues(g);
    double top = eig.back();
    // An all-(numerically)-zero family spans nothing.
    if (top <= tol.absolute * tol.absolute) {
        return 0;
    }
    double cutoff = tol.relative * top;
    return static_cast<std::size_t>(std::count_if(eig.begin(), eig.end(), [&](double v) { return v > cutoff; }));
}

std::vector<ComplexVector> orthonormalize(std::span<const ComplexVector> vectors, const Tolerance &tol) {
    std::vector<ComplexVector> basis;
    if (vectors.empty()) {
        return basis;
    }
    const std::size_t dim = vectors[0].dim();
    const auto &k = kernels::active();
    for (const auto &v : vectors) {
        if (v.dim() != dim) {
            throw DimensionError("orthonormalize: vectors of unequal dimension");
        }
        ComplexVector w = v;
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &q : basis) {
                cplx c = inner(q, w);
                k.caxpy(-c.real(), -c.imag(), q.raw(), w.raw(), dim);
            }
        }
        double nrm = w.norm();
        if (nrm < tol.absolute) {
            continue;
        }
        w *= 1.0 / nrm;
        basis.push_back(std::move(w));
    }
    return basis;
}

std::string shape_string(const ComplexMatrix &m) {
    std::ostringstream s;
    s << m.rows() << "x" << m.cols();
    return s.str();
}

}  // namespace opgraph
