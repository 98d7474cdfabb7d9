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

// opgraph: build operator graphs and code spaces, check the anticlique
// condition and compare computed graph dimensions with closed forms.
//
// Exit codes: 0 all hard checks pass, 1 a mathematical check failed,
// 2 usage or parameter error.

#include <deque>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opgraph/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string oracle = "both";
    double tol_abs = 1e-12;
    double tol_rel = 1e-9;
    bool full_gram = false;
    bool deterministic = false;
    std::uint64_t subsample_seed = 1;
};

struct Section4Flags {
    std::optional<int> p, y, h, d;
    bool allow_d1 = false;
};

void add_common(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("--oracle", flags.oracle, "Dimension oracle: labels, gram or both")
        ->check(CLI::IsMember({"labels", "gram", "both"}));
    cmd->add_option("--tol-abs", flags.tol_abs, "Absolute tolerance for residuals");
    cmd->add_option("--tol-rel", flags.tol_rel, "Relative rank threshold (times largest Gram eigenvalue)");
    cmd->add_flag("--full-gram", flags.full_gram, "Run the Gram oracle on every generator, however many");
    cmd->add_flag("--deterministic", flags.deterministic, "Zero runtime_ms so output is byte-stable");
    cmd->add_option("--subsample-seed", flags.subsample_seed, "Seed for the Gram subsample on large graphs");
}

void add_section4(CLI::App *cmd, Section4Flags &flags) {
    cmd->add_option("--p", flags.p, "Subgroup order p (n = p*y)");
    cmd->add_option("--y", flags.y, "Coset count y");
    cmd->add_option("--h", flags.h, "Shift parameter h (q_{k+1} = (X^{h+1} (x) X^{h+1}) q_k)");
    cmd->add_option("--d", flags.d, "Code dimension d");
    cmd->add_flag("--allow-d1", flags.allow_d1, "Permit d = 1");
}

opgraph::Section4Params section4_from(const Section4Flags &flags) {
    if (!flags.p || !flags.y || !flags.h || !flags.d) {
        throw opgraph::ParameterError("section4/remark2 need --p, --y, --h and --d");
    }
    opgraph::Section4Params params{*flags.p, *flags.y, *flags.h, *flags.d, flags.allow_d1};
    params.validate();
    return params;
}

opgraph::VerifyRequest request_from(const CommonFlags &flags) {
    opgraph::VerifyRequest req;
    req.oracle = flags.oracle == "labels" ? opgraph::OracleMode::labels
                 : flags.oracle == "gram" ? opgraph::OracleMode::gram
                                          : opgraph::OracleMode::both;
    req.tol = {flags.tol_abs, flags.tol_rel};
    req.full_gram = flags.full_gram;
    req.deterministic = flags.deterministic;
    req.subsample_seed = flags.subsample_seed;
    return req;
}

void print_text(const opgraph::VerificationReport &r) {
    auto j = opgraph::to_json(r);
    std::cout << "construction      " << r.construction << " " << j["params"].dump() << "\n";
    std::cout << "dim H / dim K     " << r.space_dim << " / " << r.code_dim << "\n";
    std::cout << "dim V (labels)    " << j["graph_dim_labels"].dump() << "\n";
    std::cout << "dim V (gram)      " << j["graph_dim_gram"].dump() << "  [" << r.gram_mode << "]\n";
    if (r.gram_subsample) {
        std::cout << "gram subsample    rank " << r.gram_subsample->gram_rank << " of "
                  << r.gram_subsample->distinct_labels << " distinct labels\n";
    }
    std::cout << "claimed dim       " << j["paper_claimed_dim"].dump() << "  match " << j["formula_match"].dump()
              << "\n";
    std::cout << "anticlique        " << (r.anticlique ? "yes" : "NO") << "  (compressed dim " << r.compressed_dim
              << ", residual " << r.max_residual << ")\n";
    std::cout << "baseline bounds   knill " << r.bounds.knill_max << ", commutative " << r.bounds.commutative_max
              << "\n";
    std::cout << "result            " << (r.hard_checks_pass() ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const std::string &construction, std::optional<int> n, bool allow_small, const Section4Flags &s4,
               const CommonFlags &flags, bool json) {
    auto req = request_from(flags);
    req.construction = construction;
    if (construction == "section3") {
        if (!n) {
            throw opgraph::ParameterError("section3 needs --n");
        }
        req.n = *n;
        req.allow_small = allow_small;
    } else if (construction == "section4" || construction == "remark2") {
        req.params = section4_from(s4);
    }
    auto report = opgraph::run_verify(req);
    if (json) {
        std::cout << opgraph::to_json(report).dump(2) << "\n";
    } else {
        print_text(report);
    }
    return report.hard_checks_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const std::string &construction, const std::string &n_range, std::optional<int> n_max,
              const std::string &format, unsigned jobs, const CommonFlags &flags) {
    std::vector<opgraph::VerifyRequest> points;
    if (construction == "section3") {
        if (n_range.empty()) {
            throw opgraph::ParameterError("sweep section3 needs --n A..B");
        }
        auto [lo, hi] = opgraph::parse_range(n_range);
        for (int n = lo; n <= hi; n++) {
            auto req = request_from(flags);
            req.construction = construction;
            req.n = n;
            points.push_back(req);
        }
    } else if (construction == "section4" || construction == "remark2") {
        if (!n_max) {
            throw opgraph::ParameterError("sweep " + construction + " needs --n-max");
        }
        for (const auto &params : opgraph::enumerate_section4_params(*n_max)) {
            auto req = request_from(flags);
            req.construction = construction;
            req.params = params;
            points.push_back(req);
        }
    } else {
        throw opgraph::ParameterError("sweep supports section3, section4 and remark2");
    }
    if (points.empty()) {
        throw opgraph::ParameterError("empty parameter range");
    }
    for (const auto &req : points) {
        if (req.construction == "section3") {
            opgraph::build_section3(req.n);  // validates before any output
        }
    }

    if (format == "csv") {
        std::cout << opgraph::csv_header() << "\n";
    }
    bool all_pass = true;
    auto emit = [&](const opgraph::VerificationReport &r) {
        all_pass = all_pass && r.hard_checks_pass();
        if (format == "csv") {
            std::cout << opgraph::csv_row(r) << "\n";
        } else {
            std::cout << opgraph::to_json(r).dump() << "\n";
        }
        std::cout.flush();
    };
    // Points run up to `jobs` at a time; rows are still printed in parameter order.
    std::deque<std::future<opgraph::VerificationReport>> pending;
    std::size_t next = 0;
    while (next < points.size() || !pending.empty()) {
        while (next < points.size() && pending.size() < std::max(1u, jobs)) {
            pending.push_back(std::async(std::launch::async, opgraph::run_verify, points[next++]));
        }
        emit(pending.front().get());
        pending.pop_front();
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_demo(const std::string &construction, std::optional<int> n, const Section4Flags &s4, std::size_t trials,
             std::uint64_t seed, double tol_abs) {
    opgraph::DemoRequest req;
    req.construction = construction;
    req.trials = trials;
    req.seed = seed;
    req.tol.absolute = tol_abs;
    if (construction == "section3") {
        if (!n) {
            throw opgraph::ParameterError("demo section3 needs --n");
        }
        req.n = *n;
    } else if (construction == "section4" || construction == "remark2") {
        req.params = section4_from(s4);
    }
    auto result = opgraph::run_demo(req);
    for (const auto &line : result.transcript) {
        std::cout << line << "\n";
    }
    std::cout << "trials " << trials << ", max cross-talk " << result.max_crosstalk << " -> "
              << (result.pass ? "PASS" : "FAIL") << "\n";
    return result.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"opgraph " + opgraph::tool_version() +
                 ": non-commutative operator graphs, anticliques and dimension oracles"};
    // -h is taken by the --h parameter, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.footer(
        "CSV columns (sweep --format csv):\n  " + opgraph::csv_header() +
        "\n\nExit codes: 0 all hard checks pass, 1 a mathematical check failed, 2 usage/parameter error.");

    CommonFlags common;
    Section4Flags s4;
    std::string construction;
    std::optional<int> n;
    bool allow_small = false;
    bool json = false;

    auto *verify = app.add_subcommand("verify", "Build one construction and verify it");
    verify->add_option("construction", construction, "section2 | section3 | section4 | remark2")
        ->required()
        ->check(CLI::IsMember({"section2", "section3", "section4", "remark2"}));
    verify->add_option("--n", n, "Local dimension n (section3)");
    verify->add_flag("--allow-small", allow_small, "Permit n = 2 for section3");
    verify->add_flag("--json", json, "Emit the report as JSON");
    add_section4(verify, s4);
    add_common(verify, common);

    std::string n_range;
    std::optional<int> n_max;
    std::string format = "csv";
    unsigned jobs = 1;
    auto *sweep = app.add_subcommand("sweep", "Verify a range of parameter points");
    sweep->add_option("construction", construction, "section3 | section4 | remark2")
        ->required()
        ->check(CLI::IsMember({"section3", "section4", "remark2"}));
    sweep->add_option("--n", n_range, "Range A..B of n (section3)");
    sweep->add_option("--n-max", n_max, "All valid (p,y,h,d) with p*y <= n-max (section4, remark2)");
    sweep->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    sweep->add_option("--jobs", jobs, "Parameter points verified concurrently");
    add_common(sweep, common);

    std::size_t trials = 10;
    std::uint64_t seed = 0;
    std::string demo_construction = "section3";
    auto *demo = app.add_subcommand("demo", "Apply random errors to random code words and measure cross-talk");
    demo->add_option("--construction", demo_construction, "section2 | section3 | section4 | remark2")
        ->check(CLI::IsMember({"section2", "section3", "section4", "remark2"}));
    demo->add_option("--n", n, "Local dimension n (section3)");
    demo->add_option("--trials", trials, "Number of trials");
    demo->add_option("--seed", seed, "RNG seed");
    demo->add_option("--tol-abs", common.tol_abs, "Cross-talk tolerance");
    add_section4(demo, s4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(construction, n, allow_small, s4, common, json);
        }
        if (sweep->parsed()) {
            return cmd_sweep(construction, n_range, n_max, format, jobs, common);
        }
        return cmd_demo(demo_construction, n, s4, trials, seed, common.tol_abs);
    } catch (const std::invalid_argument &e) {
        // ParameterError and DimensionError both land here.
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
