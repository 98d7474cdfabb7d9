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

#ifndef OPGRAPH_GRAPH_HPP
#define OPGRAPH_GRAPH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opgraph/linalg.hpp"
#include "opgraph/weyl.hpp"

namespace opgraph {

struct GraphInfo {
    std::string construction;
    std::vector<std::pair<std::string, int>> params;
};

/// An operator system: the span of a generator list that always contains the
/// identity and the adjoint of every generator.
///
/// Graphs built from Weyl labels keep only the labels; dense generators are
/// produced on demand, since an entangled-code graph at n = 12 has ~2·10^4 generators
/// of size 144×144.
class OperatorGraph {
   public:
    /// Adds the identity and the adjoint of every generator that is not
    /// already self-adjoint (within tol.absolute).
    static OperatorGraph from_dense(std::vector<ComplexMatrix> generators, GraphInfo info = {},
                                    const Tolerance &tol = {});

    std::size_t space_dim() const {
        return space_dim_;
    }
    std::size_t size() const;
    bool has_labels() const {
        return labels_.has_value();
    }
    /// Throws std::logic_error on a dense-only graph.
    const std::vector<WeylLabelPair> &labels() const;
    int label_n() const {
        return label_n_;
    }
    const GraphInfo &info() const {
        return info_;
    }
    void set_info(GraphInfo info) {
        info_ = std::move(info);
    }

    ComplexMatrix dense(std::size_t index) const;
    std::vector<ComplexMatrix> dense_all() const;
    std::string generator_name(std::size_t index) const;

   private:
    friend OperatorGraph graph_from_labels(int n, std::span<const WeylLabelPair> pairs, GraphInfo info);

    std::size_t space_dim_ = 0;
    int label_n_ = 0;
    std::vector<ComplexMatrix> dense_;
    std::optional<std::vector<WeylLabelPair>> labels_;
    std::shared_ptr<const WeylTable> table_;
    GraphInfo info_;
};

/// Input pairs plus I⊗I plus the label adjoint of every pair, deduplicated by
/// exponents (phases ignored; the first occurrence wins) and sorted by span key.
OperatorGraph graph_from_labels(int n, std::span<const WeylLabelPair> pairs, GraphInfo info = {});

/// Orthonormal basis of a code subspace K, stored as the columns of an isometry S.
/// P_K = S·S† is never formed.
class CodeSpace {
   public:
    /// Orthonormalizes `vectors` in order; throws DimensionError if any is
    /// linearly dependent on the previous ones (names would no longer line up).
    static CodeSpace from_vectors(std::span<const ComplexVector> vectors, std::vector<std::string> names,
                                  const Tolerance &tol = {});
    /// Requires S†S = I within tol.absolute.
    static CodeSpace from_isometry(ComplexMatrix isometry, std::vector<std::string> names, const Tolerance &tol = {});

    std::size_t space_dim() const {
        return isometry_.rows();
    }
    std::size_t code_dim() const {
        return isometry_.cols();
    }
    const ComplexMatrix &isometry() const {
        return isometry_;
    }
    ComplexVector word(std::size_t j) const {
        return isometry_.column(j);
    }
    const std::vector<std::string> &names() const {
        return names_;
    }

    /// Same subspace, basis S·U for a code_dim × code_dim unitary U.
    CodeSpace rotated(const ComplexMatrix &unitary, const Tolerance &tol = {}) const;

   private:
    ComplexMatrix isometry_;
    std::vector<std::string> names_;
};

enum class DimMethod { labels, gram, both };

struct DimResult {
    std::optional<std::size_t> labels;
    std::optional<std::size_t> gram;
    /// True unless both oracles ran and disagree.
    bool agree = true;
};

DimResult graph_dim(const OperatorGraph &g, DimMethod method, const Tolerance &tol = {});

struct SubsampleResult {
    std::size_t size = 0;
    std::size_t distinct_labels = 0;
    std::size_t gram_rank = 0;
    bool agree() const {
        return distinct_labels == gram_rank;
    }
};

/// Gram oracle on a seeded random subset of generators (all of them if the
/// graph is smaller than `size`).
SubsampleResult gram_subsample(const OperatorGraph &g, std::size_t size, std::uint64_t seed,
                               const Tolerance &tol = {});

/// [S†·V·S for each generator V].
std::vector<ComplexMatrix> compress(const OperatorGraph &g, const CodeSpace &code);

struct CompressionReport {
    bool verdict = false;
    std::size_t compressed_dim = 0;
    /// max over generators of ‖S†VS − c_V·I‖_max.
    double residual = 0.0;
    std::vector<cplx> c_values;
};

/// Anticlique test: dim P_K 𝒱 P_K = 1, read as "the compressions span one
/// dimension" (Gram rank with tol.relative).
CompressionReport is_anticlique(const OperatorGraph &g, const CodeSpace &code, const Tolerance &tol = {});

/// entries[g](j, k) = <w_j, V_g w_k> over the code words w.
struct KlTable {
    std::vector<ComplexMatrix> entries;

    cplx at(std::size_t generator, std::size_t j, std::size_t k) const {
        return entries[generator](j, k);
    }
    double max_off_diagonal() const;
    /// Largest spread of the diagonal within one generator.
    double max_diagonal_spread() const;
};

KlTable kl_table(const OperatorGraph &g, const CodeSpace &code);

}  // namespace opgraph

#endif
