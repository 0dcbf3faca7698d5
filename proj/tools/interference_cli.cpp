/*
   Copyright 2026 The interference authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end.
//
// Exit codes: 0 success, 1 statistical comparison failed, 2 invalid input,
// 3 degenerate model.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "interference.hpp"

namespace {

using namespace interference;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitComparisonFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitDegenerate = 3;

/// Either a config file or --alpha [--beta B | --ds].
struct ModelSource {
    std::string path;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    bool ds = false;

    void attach(CLI::App& cmd) {
        cmd.add_option("config", path, "Model configuration file (JSON)");
        cmd.add_option("--alpha", alpha, "Reference family alpha (decimal or p/q)");
        cmd.add_option("--beta", beta, "Reference family beta (decimal or p/q)");
        cmd.add_flag("--ds", ds, "Use the double-stochastic beta = 1/3 + 2 alpha");
    }

    config::ModelConfig resolve() const {
        if (!path.empty() && alpha) throw InvalidConfig("give a config file or --alpha, not both");
        if (!path.empty()) return config::load(path);
        if (!alpha) throw InvalidConfig("a config file or --alpha is required");
        json r{{"alpha", *alpha}};
        if (beta) r["beta"] = *beta;
        if (ds) r["ds"] = true;
        return config::parse(json{{"reference", r}});
    }
};

json resolved(const config::ModelConfig& mc) {
    json out = io::header();
    out["model"] = config::dump(mc.model);
    if (mc.reference) out["reference"] = config::to_json(*mc.reference);
    return out;
}

reference::Grid parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw InvalidConfig("--grid: expected start:stop:step");
    return {config::parse_number(json(text.substr(0, c1)), "--grid start"),
            config::parse_number(json(text.substr(c1 + 1, c2 - c1 - 1)), "--grid stop"),
            config::parse_number(json(text.substr(c2 + 1)), "--grid step")};
}

int run_analyze(const ModelSource& src, const std::string& format, double tol) {
    const auto mc = src.resolve();
    const auto report = analyze(mc.model, tol);
    if (format == "csv") {
        io::write_csv(std::cout, report);
    } else {
        json out = resolved(mc);
        out["tolerance"] = tol;
        out.update(io::to_json(report));
        std::cout << out.dump(2) << '\n';
    }
    return kExitOk;
}

int run_sweep(const std::string& grid_text, bool ds, const std::optional<std::string>& beta_text,
              const std::string& format, double tol) {
    if (ds && beta_text) throw InvalidConfig("give either --ds or --beta, not both");
    if (!ds && !beta_text) throw InvalidConfig("one of --ds or --beta is required");
    const auto grid = parse_grid(grid_text);
    std::optional<double> beta;
    if (beta_text) beta = config::parse_number(json(*beta_text), "--beta");
    const auto rows = reference::sweep(grid, ds, beta, tol);
    if (format == "json") {
        json out = io::header();
        out["grid"] = {{"start", grid.start}, {"stop", grid.stop}, {"step", grid.step}};
        out["ds"] = ds;
        if (beta) out["beta"] = *beta;
        out["tolerance"] = tol;
        out["rows"] = json::array();
        for (const auto& r : rows) out["rows"].push_back(io::to_json(r));
        std::cout << out.dump(2) << '\n';
    } else {
        io::write_csv(std::cout, rows);
    }
    return kExitOk;
}

int run_simulate(const ModelSource& src, const mc::Config& cfg, double k_sigma) {
    mc::check(cfg);
    if (!(k_sigma >= 0.0)) throw InvalidConfig("--ksigma must be non-negative");
    const auto model = src.resolve();
    const auto analytic = probability_report(model.model);
    const auto empirical = mc::simulate(model.model, cfg);
    const auto result = mc::compare(analytic, empirical, k_sigma);
    json out = resolved(model);
    out["simulation"] = {{"seed", cfg.seed}, {"samples", cfg.samples}, {"streams", cfg.streams},
                         {"k_sigma", k_sigma}};
    out["counts"] = io::to_json(empirical.counts);
    out["comparison"] = io::to_json(result);
    std::cout << out.dump(2) << '\n';
    return result.passed ? kExitOk : kExitComparisonFailed;
}

int run_thresholds() {
    const auto t = reference::thresholds();
    json out = io::header();
    out["alpha_minus"] = t.alpha_minus;
    out["alpha_plus"] = t.alpha_plus;
    out["xi_max"] = reference::xi_max();
    out["decoherence_alpha"] = reference::kDecoherenceAlpha;
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interference rules from filtered classical ensembles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(io::kVersion));

    std::string format = "json";
    double tol = kDefaultRegimeTolerance;

    auto* analyze_cmd = app.add_subcommand("analyze", "Exact probabilities, deviations and regime");
    ModelSource analyze_src;
    analyze_src.attach(*analyze_cmd);
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    analyze_cmd->add_option("--tol", tol, "Regime classification tolerance");

    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate the reference family along alpha");
    std::string grid;
    bool sweep_ds = false;
    std::optional<std::string> sweep_beta;
    std::string sweep_format = "csv";
    sweep_cmd->add_option("--grid", grid, "start:stop:step inside (0, 1/3)")->required();
    sweep_cmd->add_flag("--ds", sweep_ds, "Follow the double-stochastic line");
    sweep_cmd->add_option("--beta", sweep_beta, "Hold beta fixed");
    sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_option("--tol", tol, "Regime classification tolerance");

    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate compared with the exact report");
    ModelSource sim_src;
    sim_src.attach(*sim_cmd);
    mc::Config cfg;
    double k_sigma = 4.0;
    sim_cmd->add_option("--samples", cfg.samples, "Total number of draws");
    sim_cmd->add_option("--seed", cfg.seed, "64-bit seed");
    sim_cmd->add_option("--streams", cfg.streams, "Independent parallel streams");
    sim_cmd->add_option("--ksigma", k_sigma, "Pass threshold in standard errors");

    auto* thr_cmd = app.add_subcommand("thresholds", "Regime thresholds of the reference family");

    auto* dump_cmd = app.add_subcommand("dump-config", "Print the explicit configuration of a model");
    ModelSource dump_src;
    dump_src.attach(*dump_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze_src, format, tol);
        if (*sweep_cmd) return run_sweep(grid, sweep_ds, sweep_beta, sweep_format, tol);
        if (*sim_cmd) return run_simulate(sim_src, cfg, k_sigma);
        if (*thr_cmd) return run_thresholds();
        if (*dump_cmd) {
            std::cout << config::dump(dump_src.resolve().model).dump(2) << '\n';
            return kExitOk;
        }
    } catch (const DegenerateDenominator& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
