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

// JSON and CSV renderings of reports. Output is locale-independent: doubles
// go through std::to_chars (shortest round-trip form) or nlohmann::json.

#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "interference/analysis.hpp"
#include "interference/monte_carlo.hpp"
#include "interference/reference_model.hpp"

namespace interference::io {

using nlohmann::json;

inline constexpr std::string_view kToolName = "interference";
inline constexpr std::string_view kVersion = "1.0.0";

inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline json to_json(const Vec2& v) { return json::array({v[0], v[1]}); }
inline json to_json(const Mat2& m) { return json::array({to_json(m[0]), to_json(m[1])}); }

inline json to_json(const Phase& p) {
    return {{"kind", to_string(p.kind)}, {"theta", p.theta}, {"sign", p.sign}};
}

inline json header() { return {{"tool", kToolName}, {"version", kVersion}}; }

inline json to_json(const ProbabilityReport& r) {
    json out;
    out["probabilities"] = {{"p_b", to_json(r.p_b)},         {"p_a", to_json(r.p_a)},
                            {"p_joint", to_json(r.p_joint)}, {"p_cond", to_json(r.p_cond)},
                            {"q_joint", to_json(r.q_joint)}, {"q_cond", to_json(r.q_cond)}};
    out["stochastic"] = r.stochastic;
    out["double_stochastic"] = r.double_stochastic;
    if (r.deviation) {
        const auto& d = *r.deviation;
        out["deviation"] = {{"delta", to_json(d.delta)},
                            {"lambda", to_json(d.lambda)},
                            {"regime", to_string(d.regime)},
                            {"phases", json::array({to_json(d.phases[0]), to_json(d.phases[1])})}};
    } else {
        out["deviation"] = nullptr;
    }
    out["xi"] = r.xi ? to_json(*r.xi) : json(nullptr);
    if (r.degenerate_outcome) out["degenerate_outcome"] = *r.degenerate_outcome;
    return out;
}

/// Flat "quantity,value" table of a report.
inline void write_csv(std::ostream& os, const ProbabilityReport& r) {
    os << "quantity,value\n";
    auto row = [&](const std::string& name, const std::string& value) {
        os << name << ',' << value << '\n';
    };
    auto vec = [&](const std::string& name, const Vec2& v) {
        for (int i = 0; i < 2; ++i) row(name + "_" + std::to_string(i), format_double(v[i]));
    };
    auto mat = [&](const std::string& name, const Mat2& m) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                row(name + "_" + std::to_string(i) + std::to_string(j), format_double(m[i][j]));
    };
    vec("p_b", r.p_b);
    vec("p_a", r.p_a);
    mat("p_joint", r.p_joint);
    mat("p_cond", r.p_cond);
    mat("q_joint", r.q_joint);
    mat("q_cond", r.q_cond);
    row("stochastic", r.stochastic ? "true" : "false");
    row("double_stochastic", r.double_stochastic ? "true" : "false");
    if (r.deviation) {
        vec("delta", r.deviation->delta);
        vec("lambda", r.deviation->lambda);
        row("regime", std::string(to_string(r.deviation->regime)));
        for (int j = 0; j < 2; ++j) {
            const auto& p = r.deviation->phases[j];
            const auto s = std::to_string(j);
            row("phase_kind_" + s, std::string(to_string(p.kind)));
            row("theta_" + s, format_double(p.theta));
            row("phase_sign_" + s, std::to_string(p.sign));
        }
    }
    if (r.xi) mat("xi", *r.xi);
}

inline constexpr std::string_view kSweepHeader =
    "alpha,beta,lambda0,lambda1,regime,phase_kind,theta0,pi0,pi1,xi_asym";

inline void write_csv(std::ostream& os, const std::vector<reference::SweepRow>& rows) {
    os << kSweepHeader << '\n';
    for (const auto& r : rows) {
        os << format_double(r.alpha) << ',' << format_double(r.beta) << ','
           << format_double(r.lambda0) << ',' << format_double(r.lambda1) << ','
           << to_string(r.regime) << ',' << to_string(r.phase_kind) << ','
           << format_double(r.theta0) << ',' << format_double(r.pi0) << ','
           << format_double(r.pi1) << ',' << format_double(r.xi_asym) << '\n';
    }
}

inline json to_json(const reference::SweepRow& r) {
    return {{"alpha", r.alpha},   {"beta", r.beta},
            {"lambda0", r.lambda0}, {"lambda1", r.lambda1},
            {"regime", to_string(r.regime)}, {"phase_kind", to_string(r.phase_kind)},
            {"theta0", r.theta0}, {"pi0", r.pi0},
            {"pi1", r.pi1},       {"xi_asym", r.xi_asym}};
}

inline json to_json(const mc::ComparisonResult& c) {
    json checks = json::array();
    for (const auto& q : c.checks) {
        json item{{"name", q.name}, {"compared", q.compared}};
        if (q.compared) {
            item["analytic"] = q.analytic;
            item["empirical"] = q.empirical;
            item["std_error"] = q.std_error;
            item["n"] = q.n;
            item["pass"] = q.pass;
        }
        checks.push_back(std::move(item));
    }
    return {{"passed", c.passed}, {"checks", checks}, {"discrepancies", c.discrepancies}};
}

inline json to_json(const mc::Tally& t) {
    json out = json::array();
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                out.push_back({{"b", i}, {"a", k}, {"a_lifted", l}, {"count", t.cells[i][k][l]}});
    return out;
}

}  // namespace interference::io
