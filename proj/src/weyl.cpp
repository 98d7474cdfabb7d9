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

#include "opgraph/weyl.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace opgraph {

namespace {

int reduce(long long k, int n) {
    long long r = k % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

void require_same_n(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("Weyl labels over different n (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

// X^kx Z^kz with both factors taken from their defining eigenbases.
ComplexMatrix xz_power(int n, int kx, int kz) {
    std::vector<cplx> xdiag(static_cast<std::size_t>(n));
    std::vector<cplx> zdiag(static_cast<std::size_t>(n));
    for (int j = 0; j < n; j++) {
        xdiag[static_cast<std::size_t>(j)] = root_of_unity(n, static_cast<long long>(j) * kx);
        zdiag[static_cast<std::size_t>(j)] = root_of_unity(n, static_cast<long long>(j) * kz);
    }
    ComplexMatrix f = fourier_basis(n).as_matrix();
    ComplexMatrix zpow = matmul(matmul(f, ComplexMatrix::diagonal(zdiag)), adjoint(f));
    return matmul(ComplexMatrix::diagonal(xdiag), zpow);
}

}  // namespace

cplx root_of_unity(int n, long long k) {
    if (n < 1) {
        throw std::invalid_argument("root_of_unity needs n >= 1");
    }
    int r = reduce(k, n);
    if (r == 0) {
        return 1.0;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * r / n);
}

ComplexMatrix FourierBasis::as_matrix() const {
    return ComplexMatrix::from_columns(vectors);
}

FourierBasis fourier_basis(int n) {
    if (n < 1) {
        throw std::invalid_argument("fourier_basis needs n >= 1");
    }
    FourierBasis basis;
    basis.n = n;
    double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; j++) {
        ComplexVector f(static_cast<std::size_t>(n));
        for (int k = 0; k < n; k++) {
            f[static_cast<std::size_t>(k)] = scale * root_of_unity(n, static_cast<long long>(j) * k);
        }
        basis.vectors.push_back(std::move(f));
    }
    return basis;
}

WeylLabel::WeylLabel(int n, long long kx, long long kz, long long phase) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("WeylLabel needs n >= 1");
    }
    kx_ = reduce(kx, n);
    kz_ = reduce(kz, n);
    phase_ = reduce(phase, n);
}

std::string WeylLabel::str() const {
    std::ostringstream s;
    if (phase_ != 0) {
        s << "w^" << phase_ << "*";
    }
    s << "X^" << kx_ << "Z^" << kz_;
    return s.str();
}

WeylLabelPair::WeylLabelPair(WeylLabel left, WeylLabel right) : left(left), right(right) {
    require_same_n(left.n(), right.n());
}

std::uint64_t WeylLabelPair::span_key() const {
    std::uint64_t n = static_cast<std::uint64_t>(left.n());
    return ((static_cast<std::uint64_t>(left.kx()) * n + left.kz()) * n + right.kx()) * n + right.kz();
}

std::string WeylLabelPair::str() const {
    std::ostringstream s;
    int phase = total_phase();
    if (phase != 0) {
        s << "w^" << phase << "*";
    }
    s << "X^" << left.kx() << "Z^" << left.kz() << "(x)X^" << right.kx() << "Z^" << right.kz();
    return s.str();
}

ComplexMatrix x_matrix(int n) {
    return xz_power(n, 1, 0);
}

ComplexMatrix z_matrix(int n) {
    return xz_power(n, 0, 1);
}

ComplexMatrix weyl_dense(const WeylLabel &label) {
    ComplexMatrix m = xz_power(label.n(), label.kx(), label.kz());
    if (label.phase_exp() != 0) {
        m *= root_of_unity(label.n(), label.phase_exp());
    }
    return m;
}

ComplexMatrix weyl_dense(const WeylLabelPair &pair) {
    return kron(weyl_dense(pair.left), weyl_dense(pair.right));
}

WeylLabel label_mul(const WeylLabel &a, const WeylLabel &b) {
    require_same_n(a.n(), b.n());
    long long phase = static_cast<long long>(a.phase_exp()) + b.phase_exp() +
                      static_cast<long long>(a.kz()) * b.kx();
    return {a.n(), static_cast<long long>(a.kx()) + b.kx(), static_cast<long long>(a.kz()) + b.kz(), phase};
}

WeylLabel label_pow(const WeylLabel &a, unsigned long long s) {
    WeylLabel acc = WeylLabel::identity(a.n());
    for (unsigned long long i = 0; i < s; i++) {
        acc = label_mul(acc, a);
    }
    return acc;
}

WeylLabel label_adjoint(const WeylLabel &a) {
    long long phase = static_cast<long long>(a.kx()) * a.kz() - a.phase_exp();
    return {a.n(), -static_cast<long long>(a.kx()), -static_cast<long long>(a.kz()), phase};
}

WeylLabelPair label_mul(const WeylLabelPair &a, const WeylLabelPair &b) {
    return {label_mul(a.left, b.left), label_mul(a.right, b.right)};
}

WeylLabelPair label_adjoint(const WeylLabelPair &a) {
    return {label_adjoint(a.left), label_adjoint(a.right)};
}

WeylTable::WeylTable(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("WeylTable needs n >= 1");
    }
    bases_.reserve(static_cast<std::size_t>(n) * n);
    for (int kx = 0; kx < n; kx++) {
        for (int kz = 0; kz < n; kz++) {
            bases_.push_back(xz_power(n, kx, kz));
        }
    }
}

ComplexMatrix WeylTable::dense(const WeylLabel &label) const {
    require_same_n(label.n(), n_);
    ComplexMatrix m = base(label.kx(), label.kz());
    if (label.phase_exp() != 0) {
        m *= root_of_unity(n_, label.phase_exp());
    }
    return m;
}

ComplexMatrix WeylTable::dense(const WeylLabelPair &pair) const {
    require_same_n(pair.n(), n_);
    ComplexMatrix m = kron(base(pair.left.kx(), pair.left.kz()), base(pair.right.kx(), pair.right.kz()));
    if (pair.total_phase() != 0) {
        m *= root_of_unity(n_, pair.total_phase());
    }
    return m;
}

}  // namespace opgraph
