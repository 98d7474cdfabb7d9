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

#ifndef OPGRAPH_WEYL_HPP
#define OPGRAPH_WEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "opgraph/linalg.hpp"

/// Fourier basis and generalized Pauli operators on C^n.
///
/// Conventions follow the construction being verified, which is the reverse of
/// the usual qudit convention: X is diagonal in the standard basis,
///     X e_j = ω^j e_j,
/// and Z is diagonal in the Fourier basis,
///     Z f_j = ω^j f_j,   f_j = n^{-1/2} Σ_k ω^{jk} e_k,
/// with ω = exp(2πi/n) and 0-based indices. Consequently X f_j = f_{j+1} and
/// Z X = ω X Z.
namespace opgraph {

/// ω^k for ω = exp(2πi/n), with k reduced mod n first so ω^0 is exactly 1.
cplx root_of_unity(int n, long long k);

struct FourierBasis {
    int n = 0;
    std::vector<ComplexVector> vectors;

    /// Matrix with f_0..f_{n-1} as columns.
    ComplexMatrix as_matrix() const;
};

/// Throws std::invalid_argument for n < 1.
FourierBasis fourier_basis(int n);

/// ω^phase · X^kx · Z^kz, all exponents reduced to [0, n).
class WeylLabel {
   public:
    WeylLabel(int n, long long kx, long long kz, long long phase = 0);

    static WeylLabel identity(int n) {
        return {n, 0, 0, 0};
    }
    static WeylLabel x(int n, long long power = 1) {
        return {n, power, 0, 0};
    }
    static WeylLabel z(int n, long long power = 1) {
        return {n, 0, power, 0};
    }

    int n() const {
        return n_;
    }
    int kx() const {
        return kx_;
    }
    int kz() const {
        return kz_;
    }
    int phase_exp() const {
        return phase_;
    }

    /// Same operator up to a scalar.
    bool same_exponents(const WeylLabel &other) const {
        return n_ == other.n_ && kx_ == other.kx_ && kz_ == other.kz_;
    }
    bool operator==(const WeylLabel &other) const = default;

    std::string str() const;

   private:
    int n_;
    int kx_;
    int kz_;
    int phase_;
};

/// left ⊗ right on C^n ⊗ C^n.
struct WeylLabelPair {
    WeylLabel left;
    WeylLabel right;

    WeylLabelPair(WeylLabel left, WeylLabel right);

    int n() const {
        return left.n();
    }
    /// Packs the four exponents (phases dropped) into a unique integer in [0, n^4).
    std::uint64_t span_key() const;
    int total_phase() const {
        return (left.phase_exp() + right.phase_exp()) % left.n();
    }
    bool operator==(const WeylLabelPair &other) const = default;

    std::string str() const;
};

ComplexMatrix x_matrix(int n);
/// Built as F·diag(ω^j)·F† from the Fourier basis.
ComplexMatrix z_matrix(int n);

ComplexMatrix weyl_dense(const WeylLabel &label);
ComplexMatrix weyl_dense(const WeylLabelPair &pair);

/// Label of a·b, using Z^b X^c = ω^{bc} X^c Z^b to restore X-then-Z order.
WeylLabel label_mul(const WeylLabel &a, const WeylLabel &b);
WeylLabel label_pow(const WeylLabel &a, unsigned long long s);
/// (ω^p X^a Z^b)* = ω^{ab-p} X^{-a} Z^{-b}.
WeylLabel label_adjoint(const WeylLabel &a);

WeylLabelPair label_mul(const WeylLabelPair &a, const WeylLabelPair &b);
WeylLabelPair label_adjoint(const WeylLabelPair &a);

/// Caches X^a Z^b (phase 0) for every exponent pair of one n, so lowering
/// many labels to dense form does not rebuild them.
class WeylTable {
   public:
    explicit WeylTable(int n);

    int n() const {
        return n_;
    }
    const ComplexMatrix &base(int kx, int kz) const {
        return bases_[static_cast<std::size_t>(kx * n_ + kz)];
    }
    ComplexMatrix dense(const WeylLabel &label) const;
    ComplexMatrix dense(const WeylLabelPair &pair) const;

   private:
    int n_;
    std::vector<ComplexMatrix> bases_;
};

}  // namespace opgraph

#endif
