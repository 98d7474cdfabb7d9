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

#ifndef OPGRAPH_CONSTRUCTIONS_HPP
#define OPGRAPH_CONSTRUCTIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "opgraph/graph.hpp"

namespace opgraph {

/// Construction parameters that violate a stated constraint. The message names
/// the violated inequality.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Construction {
    OperatorGraph graph;
    CodeSpace code;
};

/// Parameters of the entangled-code construction, n = p·y.
struct Section4Params {
    int p = 2;
    int y = 2;
    int h = 0;
    int d = 2;
    /// Permit d = 1 (a one-dimensional code).
    bool allow_d1 = false;

    int n() const {
        return p * y;
    }
    /// Checks p ≥ 2, y ≥ 2, h ≥ 0, d ≥ 2 (or 1 with allow_d1) and
    /// (h+1)(d+1) ≥ y ≥ (h+1)d.
    void validate() const;
    std::string str() const;
};

/// Every valid parameter point with p·y ≤ n_max and d ≥ 2, sorted by (n, p, y, h, d).
std::vector<Section4Params> enumerate_section4_params(int n_max);

/// Shifts m whose residue r = m mod y satisfies r ≠ (d−j)(h+1) and
/// r ≠ y + (j−d)(h+1) (mod y) for every j in [1, d].
class ResidueSetA {
   public:
    ResidueSetA(int y, int h, int d);

    int y() const {
        return y_;
    }
    bool allows_residue(int r) const;
    bool contains(long long m) const;
    std::vector<int> allowed_residues() const;
    /// Members of A in [begin, end).
    std::vector<int> members(int begin, int end) const;

   private:
    int y_;
    int h_;
    int d_;
    std::vector<bool> allowed_;
};

ResidueSetA residue_set_A(int y, int h, int d);

// --- the four-dimensional example -----------------------------------------

/// σ_x, σ_y, σ_z with σ_y = [[0, i], [−i, 0]].
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

/// Graph Lin{I, T, U, V, W} with T = σx⊗I, U = σy⊗I, V = I⊗σy, W = I⊗σz,
/// code span{f+, f−}, f+ = e1⊗(1,1), f− = e2⊗(1,−1) (normalized).
Construction build_section2();
/// Unnormalized f+ and f−.
std::vector<ComplexVector> section2_words();
/// The dense generators T, U, V, W (without identity).
std::vector<ComplexMatrix> section2_errors();
/// Lin{I⊗I, I⊗σx} with code C²⊗(1,0)ᵀ.
Construction build_section2_bit_flip();

// --- product-state code on C^n ⊗ C^n --------------------------------------

/// Labels of (XZ^k)^s ⊗ I and I ⊗ (XZ^k)^s for 0 ≤ k < n, 1 ≤ s < n.
std::vector<WeylLabelPair> section3_labels(int n);
/// Code span{h_j = f_j ⊗ f_j}.
CodeSpace section3_code(int n);
/// n ≥ 3 unless allow_small.
Construction build_section3(int n, bool allow_small = false);

// --- entangled code --------------------------------------------------------

/// q_1 = Σ_{t<p} f_{ty} ⊗ f_{ty} / √p, q_{k+1} = (X^{h+1} ⊗ X^{h+1}) q_k.
CodeSpace build_code_K1(const Section4Params &params);

/// X^m Z^k ⊗ X^j Z^s with m ≠ j.
std::vector<WeylLabelPair> family_A(int n);
/// X^m Z^k ⊗ X^m Z^s with m ∈ A.
std::vector<WeylLabelPair> family_B(const Section4Params &params);
/// X^m Z^k ⊗ X^m Z^s with k + s ≢ 0 (mod p).
std::vector<WeylLabelPair> family_C(const Section4Params &params);

/// Lin(𝒜 ∪ ℬ ∪ 𝒞 ∪ 𝒱) with the code K₁.
Construction build_section4(const Section4Params &params);
/// Lin(𝒜 ∪ {I}) with the product code span{h_j}, n = params.n().
Construction build_remark2(const Section4Params &params);

/// Residues of the steps used to show K₁ is an anticlique.
struct Section4ProofChecks {
    /// max |<(X^m⊗X^m) q_k, q_j>| over m ∈ A ∩ [1, n), all k, j.
    double shifted_overlap = 0.0;
    /// max |<(I⊗Z^r) q_1, q_1>| over r ≢ 0 (mod p).
    double phase_overlap = 0.0;
    /// max ‖(X^y⊗X^y) q_k − q_k‖_max.
    double period_defect = 0.0;
    std::size_t shifts_checked = 0;
    double worst() const;
};

Section4ProofChecks section4_proof_checks(const Section4Params &params);

// --- closed forms ----------------------------------------------------------

struct PredictedDims {
    /// 2n(n−1)+1; always set.
    std::int64_t thm2 = 0;
    /// n³(n−1) + #A′·n² + (n − #A′)(y(p−1)(p+2)/2 + n(y−1)/2) + 1; set for section4 params.
    std::int64_t thm4 = 0;
    int n = 0;
    int a_prime = 0;
    int r_a = 0;
    /// These are the claimed values, not computed ranks.
    static constexpr bool paper_claimed = true;
};

std::int64_t predicted_thm2(int n);
PredictedDims predicted_dims(const Section4Params &params);

struct BaselineBounds {
    std::int64_t knill_max = 0;
    std::int64_t commutative_max = 0;
};

/// knill_max: largest v with v(v+1) ≤ dim_h/dim_k;
/// commutative_max: floor((dim_h − dim_k)/(dim_k − 1)). Needs dim_h ≥ dim_k ≥ 2.
BaselineBounds baseline_bounds(std::int64_t dim_h, std::int64_t dim_k);

}  // namespace opgraph

#endif
