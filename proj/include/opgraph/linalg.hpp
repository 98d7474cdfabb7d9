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

#ifndef OPGRAPH_LINALG_HPP
#define OPGRAPH_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace opgraph {

using cplx = std::complex<double>;

/// Raised when operand shapes are incompatible.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// `absolute` bounds orthogonality residuals; `relative` scales the largest
/// Gram eigenvalue into a rank threshold.
struct Tolerance {
    double absolute = 1e-12;
    double relative = 1e-9;

    /// Throws std::invalid_argument unless both are strictly positive and finite.
    void validate() const;
};

class ComplexVector {
   public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim);
    explicit ComplexVector(std::vector<cplx> entries);

    /// Standard basis vector e_index.
    static ComplexVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const {
        return entries_.size();
    }
    cplx &operator[](std::size_t i) {
        return entries_[i];
    }
    const cplx &operator[](std::size_t i) const {
        return entries_[i];
    }
    std::span<cplx> entries() {
        return entries_;
    }
    std::span<const cplx> entries() const {
        return entries_;
    }
    const double *raw() const {
        return reinterpret_cast<const double *>(entries_.data());
    }
    double *raw() {
        return reinterpret_cast<double *>(entries_.data());
    }

    double norm() const;

    ComplexVector &operator+=(const ComplexVector &other);
    ComplexVector &operator*=(cplx scalar);

   private:
    std::vector<cplx> entries_;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of equal dimension).
    static ComplexMatrix from_columns(std::span<const ComplexVector> columns);
    static ComplexMatrix diagonal(std::span<const cplx> diag);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    cplx &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    std::span<const cplx> entries() const {
        return entries_;
    }
    std::span<cplx> entries() {
        return entries_;
    }
    const double *raw() const {
        return reinterpret_cast<const double *>(entries_.data());
    }
    double *raw() {
        return reinterpret_cast<double *>(entries_.data());
    }
    const double *row_raw(std::size_t r) const {
        return raw() + 2 * r * cols_;
    }
    double *row_raw(std::size_t r) {
        return raw() + 2 * r * cols_;
    }

    ComplexVector column(std::size_t c) const;
    cplx trace() const;

    ComplexMatrix &operator*=(cplx scalar);
    ComplexMatrix &operator+=(const ComplexMatrix &other);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix adjoint(const ComplexMatrix &m);
ComplexMatrix transpose(const ComplexMatrix &m);
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector apply(const ComplexMatrix &m, const ComplexVector &v);
ComplexMatrix operator*(cplx scalar, ComplexMatrix m);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);

/// Block (i,j) of the result is a(i,j)·b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

/// (a ⊗ b)·v without forming the Kronecker product. With v read as the
/// row-major a.cols × b.cols matrix M, this is a·M·bᵀ.
ComplexVector kron_apply(const ComplexMatrix &a, const ComplexMatrix &b, const ComplexVector &v);

/// <u, v> = sum conj(u_i) v_i (antilinear in the first slot).
cplx inner(const ComplexVector &u, const ComplexVector &v);

/// Hilbert–Schmidt product tr(A·B*) = sum A_ij conj(B_ij).
cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexVector &a, const ComplexVector &b);
double max_abs(const ComplexMatrix &m);

bool is_unitary(const ComplexMatrix &m, const Tolerance &tol = {});

/// G[a][b] = hs_inner(ops[a], ops[b]).
ComplexMatrix gram_matrix(std::span<const ComplexMatrix> ops);

/// Eigenvalues of a Hermitian matrix in ascending order.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h);

/// Dimension of span(ops) via the Hilbert–Schmidt Gram matrix: the number of
/// Gram eigenvalues above tol.relative·λ_max. Whichever of the operator Gram
/// (N×N) and the entry Gram (m²×m²) is smaller gets diagonalized; they share
/// their nonzero spectrum.
std::size_t gram_rank(std::span<const ComplexMatrix> ops, const Tolerance &tol = {});

/// Modified Gram–Schmidt with one reorthogonalization pass, in input order.
/// Vectors whose residual norm falls below tol.absolute are dropped.
std::vector<ComplexVector> orthonormalize(std::span<const ComplexVector> vectors, const Tolerance &tol = {});

std::string shape_string(const ComplexMatrix &m);

}  // namespace opgraph

#endif
