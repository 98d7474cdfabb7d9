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

#include <gtest/gtest.h>

#include <algorithm>

using namespace opgraph;

TEST(report, verify_section3) {
    VerifyRequest req;
    req.construction = "section3";
    req.n = 5;
    auto r = run_verify(req);
    EXPECT_EQ(r.space_dim, 25u);
    EXPECT_EQ(r.code_dim, 5u);
    EXPECT_EQ(*r.graph_dim_labels, 41u);
    EXPECT_EQ(*r.graph_dim_gram, 41u);
    EXPECT_EQ(r.gram_mode, "full");
    EXPECT_TRUE(r.oracles_agree);
    EXPECT_EQ(*r.paper_claimed_dim, 41);
    EXPECT_TRUE(*r.formula_match);
    EXPECT_TRUE(r.anticlique);
    EXPECT_TRUE(r.hard_checks_pass());
}

TEST(report, formula_mismatch_is_not_a_hard_failure) {
    VerifyRequest req;
    req.construction = "section3";
    req.n = 4;
    auto r = run_verify(req);
    EXPECT_EQ(*r.graph_dim_labels, 21u);
    EXPECT_EQ(*r.paper_claimed_dim, 25);
    EXPECT_FALSE(*r.formula_match);
    EXPECT_TRUE(r.hard_checks_pass());
}

TEST(report, verify_section2_dense_only) {
    VerifyRequest req;
    req.construction = "section2";
    auto r = run_verify(req);
    EXPECT_FALSE(r.graph_dim_labels.has_value());
    EXPECT_EQ(*r.graph_dim_gram, 5u);
    EXPECT_TRUE(*r.formula_match);
    EXPECT_TRUE(r.anticlique);
    EXPECT_EQ(r.bounds.knill_max, 1);
    EXPECT_EQ(r.bounds.commutative_max, 2);
}

TEST(report, verify_section4_uses_subsample) {
    VerifyRequest req;
    req.construction = "section4";
    req.params = {2, 4, 1, 2};
    auto r = run_verify(req);
    EXPECT_EQ(*r.graph_dim_labels, 3969u);
    EXPECT_FALSE(r.graph_dim_gram.has_value());
    EXPECT_EQ(r.gram_mode, "subsample");
    ASSERT_TRUE(r.gram_subsample.has_value());
    EXPECT_EQ(r.gram_subsample->gram_rank, 200u);
    EXPECT_EQ(*r.paper_claimed_dim, 3921);
    EXPECT_TRUE(r.hard_checks_pass());
}

TEST(report, oracle_selection) {
    VerifyRequest req;
    req.construction = "section3";
    req.n = 3;
    req.oracle = OracleMode::labels;
    auto r = run_verify(req);
    EXPECT_TRUE(r.graph_dim_labels.has_value());
    EXPECT_FALSE(r.graph_dim_gram.has_value());
    req.oracle = OracleMode::gram;
    r = run_verify(req);
    EXPECT_FALSE(r.graph_dim_labels.has_value());
    EXPECT_EQ(*r.graph_dim_gram, 13u);
}

TEST(report, bad_requests) {
    VerifyRequest req;
    req.construction = "section5";
    EXPECT_THROW(run_verify(req), std::invalid_argument);
    req.construction = "section3";
    req.n = 2;
    EXPECT_THROW(run_verify(req), std::invalid_argument);
    req.allow_small = true;
    EXPECT_NO_THROW(run_verify(req));
    req.construction = "section4";
    req.params = {2, 4, 3, 2};
    EXPECT_THROW(run_verify(req), ParameterError);
}

TEST(report, deterministic_json_is_stable) {
    VerifyRequest req;
    req.construction = "section3";
    req.n = 4;
    req.deterministic = true;
    auto a = to_json(run_verify(req)).dump(2);
    auto b = to_json(run_verify(req)).dump(2);
    EXPECT_EQ(a, b);
    auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j["schema"], kReportSchema);
    EXPECT_EQ(j["graph_dim_labels"], 21);
    EXPECT_EQ(j["runtime_ms"], 0);
    EXPECT_EQ(j["tool_version"], tool_version());
    for (const char *key : {"construction", "params", "space_dim", "code_dim", "graph_dim_gram", "oracles_agree",
                            "paper_claimed_dim", "formula_match", "anticlique", "compressed_dim", "max_residual",
                            "bounds", "tolerance", "hard_checks_pass", "kernel_isa"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST(report, csv_row_matches_header) {
    VerifyRequest req;
    req.construction = "section4";
    req.params = {2, 2, 0, 2};
    auto r = run_verify(req);
    auto header = csv_header();
    auto row = csv_row(r);
    auto commas = [](const std::string &s) { return std::count(s.begin(), s.end(), ','); };
    EXPECT_EQ(commas(header), commas(row));
    EXPECT_EQ(row.rfind("section4,2,2,0,2,4,16,2,225,225,full,217,false,true,", 0), 0u) << row;
}

TEST(report, parse_range) {
    EXPECT_EQ(parse_range("3..9"), std::make_pair(3, 9));
    EXPECT_EQ(parse_range("7"), std::make_pair(7, 7));
    EXPECT_THROW(parse_range(""), std::invalid_argument);
    EXPECT_THROW(parse_range("3..x"), std::invalid_argument);
    EXPECT_THROW(parse_range("3-9"), std::invalid_argument);
}

TEST(report, demo_is_seeded_and_clean) {
    DemoRequest req;
    req.construction = "section3";
    req.n = 4;
    req.trials = 25;
    req.seed = 7;
    auto a = run_demo(req);
    auto b = run_demo(req);
    EXPECT_EQ(a.transcript, b.transcript);
    EXPECT_EQ(a.transcript.size(), 25u);
    EXPECT_TRUE(a.pass);
    EXPECT_LT(a.max_crosstalk, 1e-12);

    req.trials = 0;
    auto empty = run_demo(req);
    EXPECT_TRUE(empty.transcript.empty());
    EXPECT_TRUE(empty.pass);

    req.construction = "section4";
    req.params = {2, 4, 1, 2};
    req.trials = 20;
    EXPECT_TRUE(run_demo(req).pass);
}

TEST(report, build_named_rejects_unknown) {
    EXPECT_THROW(build_named("nope", 3, {}), ParameterError);
    EXPECT_EQ(build_named("remark2", 0, {2, 2, 0, 2}).graph.size(), 64u * 3 + 1);
}
