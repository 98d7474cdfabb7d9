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

#include "opgraph/report.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "opgraph/kernels.hpp"

#ifndef OPGRAPH_VERSION
#define OPGRAPH_VERSION "0.0.0"
#endif

namespace opgraph {

std::string tool_version() {
    return OPGRAPH_VERSION;
}

Construction build_named(const std::string &construction, int n, const Section4Params &params, bool allow_small) {
    if (construction == "section2") {
        return build_section2();
    }
    if (construction == "section3") {
        return build_section3(n, allow_small);
    }
    if (construction == "section4") {
        return build_section4(params);
    }
    if (construction == "remark2") {
        return build_remark2(params);
    }
    throw ParameterError("unknown construction '" + construction +
                         "' (expected section2, section3, section4 or remark2)");
}

VerificationReport run_verify(const VerifyRequest &request) {
    request.tol.validate();
    auto start = std::chrono::steady_clock::now();
    Construction c = build_named(request.construction, request.n, request.params, request.allow_small);

    VerificationReport r;
    r.construction = request.construction;
    r.params = c.graph.info().params;
    r.space_dim = c.graph.space_dim();
    r.code_dim = c.code.code_dim();
    r.tol = request.tol;

    bool want_labels = request.oracle != OracleMode::gram && c.graph.has_labels();
    bool want_gram = request.oracle != OracleMode::labels || !c.graph.has_labels();
    if (want_labels) {
        r.graph_dim_labels = graph_dim(c.graph, DimMethod::labels, request.tol).labels;
    }
    if (want_gram) {
        if (request.full_gram || c.graph.size() <= request.full_gram_limit) {
            r.gram_mode = "full";
            r.graph_dim_gram = graph_dim(c.graph, DimMethod::gram, request.tol).gram;
        } else {
            r.gram_mode = "subsample";
            r.subsample_seed = request.subsample_seed;
            r.gram_subsample = gram_subsample(c.graph, request.subsample_size, request.subsample_seed, request.tol);
        }
    }
    if (r.graph_dim_labels && r.graph_dim_gram) {
        r.oracles_agree = *r.graph_dim_labels == *r.graph_dim_gram;
    }
    if (r.gram_subsample) {
        r.oracles_agree = r.oracles_agree && r.gram_subsample->agree();
    }

    if (request.construction == "section2") {
        r.paper_claimed_dim = 5;
    } else if (request.construction == "section3") {
        r.paper_claimed_dim = predicted_thm2(request.n);
    } else if (request.construction == "section4") {
        r.paper_claimed_dim = predicted_dims(request.params).thm4;
    }
    auto computed = r.graph_dim_labels ? r.graph_dim_labels : r.graph_dim_gram;
    if (r.paper_claimed_dim && computed) {
        r.formula_match = static_cast<std::int64_t>(*computed) == *r.paper_claimed_dim;
    }

    CompressionReport cr = is_anticlique(c.graph, c.code, request.tol);
    r.compressed_dim = cr.compressed_dim;
    r.max_residual = cr.residual;
    r.anticlique = cr.verdict && cr.residual < request.tol.absolute;

    r.bounds = baseline_bounds(static_cast<std::int64_t>(r.space_dim), static_cast<std::int64_t>(r.code_dim));

    if (!request.deterministic) {
        r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                           .count();
    }
    return r;
}

nlohmann::ordered_json to_json(const VerificationReport &r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema"] = kReportSchema;
    j["construction"] = r.construction;
    ordered_json params = ordered_json::object();
    for (const auto &[k, v] : r.params) {
        params[k] = v;
    }
    j["params"] = params;
    j["space_dim"] = r.space_dim;
    j["code_dim"] = r.code_dim;
    j["graph_dim_labels"] = r.graph_dim_labels ? ordered_json(*r.graph_dim_labels) : ordered_json(nullptr);
    j["graph_dim_gram"] = r.graph_dim_gram ? ordered_json(*r.graph_dim_gram) : ordered_json(nullptr);
    j["gram_mode"] = r.gram_mode;
    if (r.gram_subsample) {
        j["gram_subsample"] = {{"size", r.gram_subsample->size},
                               {"distinct_labels", r.gram_subsample->distinct_labels},
                               {"rank", r.gram_subsample->gram_rank},
                               {"seed", r.subsample_seed}};
    } else {
        j["gram_subsample"] = nullptr;
    }
    j["oracles_agree"] = r.oracles_agree;
    j["paper_claimed_dim"] = r.paper_claimed_dim ? ordered_json(*r.paper_claimed_dim) : ordered_json(nullptr);
    j["formula_match"] = r.formula_match ? ordered_json(*r.formula_match) : ordered_json(nullptr);
    j["anticlique"] = r.anticlique;
    j["compressed_dim"] = r.compressed_dim;
    j["max_residual"] = r.max_residual;
    j["bounds"] = {{"knill_max", r.bounds.knill_max}, {"commutative_max", r.bounds.commutative_max}};
    j["tolerance"] = {{"absolute", r.tol.absolute}, {"relative", r.tol.relative}};
    j["hard_checks_pass"] = r.hard_checks_pass();
    j["kernel_isa"] = std::string(kernels::isa_name(kernels::active().isa));
    j["runtime_ms"] = r.runtime_ms;
    j["tool_version"] = tool_version();
    return j;
}

std::string csv_header() {
    return "construction,p,y,h,d,n,space_dim,code_dim,graph_dim_labels,graph_dim_gram,gram_mode,"
           "paper_claimed_dim,formula_match,anticlique,max_residual,knill_max,commutative_max,runtime_ms";
}

std::string csv_row(const VerificationReport &r) {
    auto param = [&](const char *name) -> std::string {
        for (const auto &[k, v] : r.params) {
            if (k == name) {
                return std::to_string(v);
            }
        }
        return "";
    };
    auto opt = [](const auto &v) -> std::string { return v ? std::to_string(*v) : ""; };
    auto flag = [](bool b) -> std::string { return b ? "true" : "false"; };
    std::ostringstream s;
    s << r.construction << ',' << param("p") << ',' << param("y") << ',' << param("h") << ',' << param("d") << ','
      << param("n") << ',' << r.space_dim << ',' << r.code_dim << ',' << opt(r.graph_dim_labels) << ','
      << opt(r.graph_dim_gram) << ',' << r.gram_mode << ',' << opt(r.paper_claimed_dim) << ','
      << (r.formula_match ? flag(*r.formula_match) : "") << ',' << flag(r.anticlique) << ',' << std::setprecision(3)
      << std::scientific << r.max_residual << ',' << r.bounds.knill_max << ',' << r.bounds.commutative_max << ','
      << r.runtime_ms;
    return s.str();
}

std::pair<int, int> parse_range(const std::string &text) {
    auto to_int = [&](const std::string &part) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (part.empty() || used != part.size()) {
            throw std::invalid_argument("malformed range '" + text + "' (expected A..B or a single integer)");
        }
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = to_int(text);
        return {v, v};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

DemoResult run_demo(const DemoRequest &request) {
    request.tol.validate();
    DemoResult result;
    if (request.trials == 0) {
        return result;
    }
    Construction c = build_named(request.construction, request.n, request.params);
    const ComplexMatrix &s = c.code.isometry();
    ComplexMatrix s_dag = adjoint(s);
    std::mt19937_64 rng(request.seed);
    std::uniform_int_distribution<std::size_t> pick_generator(0, c.graph.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_word(0, c.code.code_dim() - 1);

    for (std::size_t t = 0; t < request.trials; t++) {
        std::size_t g = pick_generator(rng);
        std::size_t j = pick_word(rng);
        ComplexMatrix v = c.graph.dense(g);
        ComplexVector moved = apply(v, c.code.word(j));
        cplx c_v = matmul(s_dag, matmul(v, s)).trace() / static_cast<double>(c.code.code_dim());
        double crosstalk = 0.0;
        for (std::size_t k = 0; k < c.code.code_dim(); k++) {
            cplx overlap = inner(c.code.word(k), moved);
            crosstalk = std::max(crosstalk, std::abs(k == j ? overlap - c_v : overlap));
        }
        result.max_crosstalk = std::max(result.max_crosstalk, crosstalk);
        std::ostringstream line;
        line << "trial " << (t + 1) << ": V = " << c.graph.generator_name(g) << ", word " << c.code.names()[j]
             << ", c_V = " << std::fixed << std::setprecision(6) << c_v.real() << std::showpos << c_v.imag() << "i"
             << std::noshowpos << ", max cross-talk " << std::scientific << std::setprecision(2) << crosstalk;
        result.transcript.push_back(line.str());
    }
    result.pass = result.max_crosstalk < request.tol.absolute;
    return result;
}

}  // namespace opgraph
