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

#ifndef OPGRAPH_REPORT_HPP
#define OPGRAPH_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "opgraph/constructions.hpp"

namespace opgraph {

inline constexpr int kReportSchema = 1;
std::string tool_version();

enum class OracleMode { labels, gram, both };

struct VerifyRequest {
    /// "section2" | "section3" | "section4" | "remark2"
    std::string construction;
    /// section3 only.
    int n = 0;
    bool allow_small = false;
    /// section4 / remark2 only.
    Section4Params params;
    OracleMode oracle = OracleMode::both;
    Tolerance tol;
    /// Run the Gram oracle on every generator regardless of graph size.
    bool full_gram = false;
    /// Graphs with more generators than this get a seeded subsample instead.
    std::size_t full_gram_limit = 1500;
    std::size_t subsample_size = 200;
    std::uint64_t subsample_seed = 1;
    bool deterministic = false;
};

struct VerificationReport {
    std::string construction;
    std::vector<std::pair<std::string, int>> params;
    std::size_t space_dim = 0;
    std::size_t code_dim = 0;
    std::optional<std::size_t> graph_dim_labels;
    std::optional<std::size_t> graph_dim_gram;
    /// "full", "subsample" or "off".
    std::string gram_mode = "off";
    std::optional<SubsampleResult> gram_subsample;
    std::uint64_t subsample_seed = 0;
    bool oracles_agree = true;
    std::optional<std::int64_t> paper_claimed_dim;
    std::optional<bool> formula_match;
    bool anticlique = false;
    std::size_t compressed_dim = 0;
    double max_residual = 0.0;
    BaselineBounds bounds;
    Tolerance tol;
    std::int64_t runtime_ms = 0;

    /// Anticlique verdict and oracle agreement. A formula mismatch is not a hard failure.
    bool hard_checks_pass() const {
        return anticlique && oracles_agree;
    }
};

/// Throws ParameterError / std::invalid_argument for unusable requests.
VerificationReport run_verify(const VerifyRequest &request);

nlohmann::ordered_json to_json(const VerificationReport &report);

/// Fixed CSV layout; see csv_header() for the column order.
std::string csv_header();
std::string csv_row(const VerificationReport &report);

/// "a..b" (inclusive) or a single integer. Throws std::invalid_argument on
/// malformed input; an empty range (a > b) is returned as-is for the caller
/// to reject.
std::pair<int, int> parse_range(const std::string &text);

struct DemoRequest {
    std::string construction = "section3";
    int n = 3;
    Section4Params params;
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    Tolerance tol;
};

struct DemoResult {
    std::vector<std::string> transcript;
    double max_crosstalk = 0.0;
    bool pass = true;
};

/// Random error/codeword trials: apply a random generator V to a random code
/// word w_j and compare <w_k, V w_j> against δ_kj·c_V for every k.
DemoResult run_demo(const DemoRequest &request);

/// Builds the named construction (shared by verify and demo).
Construction build_named(const std::string &construction, int n, const Section4Params &params,
                         bool allow_small = false);

}  // namespace opgraph

#endif
