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

// Model configuration documents (JSON).
//
//   {
//     "a":  {"ones": [[lo, hi], ...]},
//     "b":  {"ones": [[lo, hi], ...]},
//     "g0": {"pieces": [{"src": [lo, hi], "dst": [lo, hi]}, ...]},   optional
//     "g1": {"pieces": [...]}                                         optional
//   }
// or
//   {"reference": {"alpha": x, "beta": y}}  /  {"reference": {"alpha": x, "ds": true}}
//
// Pairs denote half-open intervals. Numbers may be JSON numbers or strings
// holding a decimal ("0.25") or a rational ("1/3"). Missing filters default
// to the identity.

#pragma once

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "interference/ensemble.hpp"
#include "interference/errors.hpp"
#include "interference/reference_model.hpp"

namespace interference::config {

using nlohmann::json;

struct ReferenceSpec {
    reference::Params params;
    bool ds = false;
};

struct ModelConfig {
    EnsembleModel model;
    std::optional<ReferenceSpec> reference;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& field, const std::string& what) {
    throw InvalidConfig(field + ": " + what);
}

inline double parse_decimal(std::string_view text, const std::string& field) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) fail(field, "cannot parse number \"" + std::string(text) + "\"");
    return v;
}

}  // namespace detail

/// JSON number, or a string holding a decimal or "p/q".
inline double parse_number(const json& j, const std::string& field) {
    if (j.is_number()) return j.get<double>();
    if (!j.is_string()) detail::fail(field, "expected a number or a \"p/q\" string");
    const auto text = j.get<std::string>();
    const auto slash = text.find('/');
    if (slash == std::string::npos) return detail::parse_decimal(text, field);
    const double num = detail::parse_decimal(std::string_view(text).substr(0, slash), field);
    const double den = detail::parse_decimal(std::string_view(text).substr(slash + 1), field);
    if (den == 0.0) detail::fail(field, "zero denominator");
    return num / den;
}

inline Interval parse_interval(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2) detail::fail(field, "expected [lo, hi]");
    Interval iv{parse_number(j[0], field + "[0]"), parse_number(j[1], field + "[1]")};
    if (!(iv.lo >= 0.0 && iv.hi <= 1.0 && iv.lo < iv.hi)) {
        detail::fail(field, "interval must satisfy 0 <= lo < hi <= 1");
    }
    return iv;
}

inline IntervalSet parse_interval_set(const json& j, const std::string& field) {
    if (!j.is_array()) detail::fail(field, "expected a list of [lo, hi] pairs");
    std::vector<Interval> ivs;
    for (std::size_t k = 0; k < j.size(); ++k)
        ivs.push_back(parse_interval(j[k], field + "[" + std::to_string(k) + "]"));
    return IntervalSet(std::move(ivs));
}

inline DichotomicObservable parse_observable(const json& root, const std::string& name) {
    if (!root.contains(name)) detail::fail(name, "missing");
    const auto& obs = root.at(name);
    if (!obs.is_object() || !obs.contains("ones")) detail::fail(name + ".ones", "missing");
    return DichotomicObservable(parse_interval_set(obs.at("ones"), name + ".ones"));
}

inline PiecewiseAffineMap parse_filter(const json& root, const std::string& name,
                                       const IntervalSet& domain) {
    if (!root.contains(name)) return PiecewiseAffineMap::identity(domain);
    const auto& f = root.at(name);
    if (!f.is_object() || !f.contains("pieces")) detail::fail(name + ".pieces", "missing");
    const auto& pieces = f.at("pieces");
    if (!pieces.is_array()) detail::fail(name + ".pieces", "expected a list");
    std::vector<AffinePiece> out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto field = name + ".pieces[" + std::to_string(k) + "]";
        const auto& p = pieces[k];
        if (!p.is_object() || !p.contains("src") || !p.contains("dst")) {
            detail::fail(field, "expected {\"src\": [lo, hi], \"dst\": [lo, hi]}");
        }
        out.push_back({parse_interval(p.at("src"), field + ".src"),
                       parse_interval(p.at("dst"), field + ".dst")});
    }
    PiecewiseAffineMap map(std::move(out), domain);
    if (auto v = validate(map); !v.empty()) {
        const auto& first = v.front();
        const auto where = first.piece >= 0 ? name + ".pieces[" + std::to_string(first.piece) + "]"
                                            : name + ".pieces";
        detail::fail(where, std::string(to_string(first.kind)) + " (" + first.message + ")");
    }
    return map;
}

inline ReferenceSpec parse_reference(const json& r) {
    if (!r.is_object()) detail::fail("reference", "expected an object");
    for (const auto& [key, value] : r.items()) {
        if (key != "alpha" && key != "beta" && key != "ds") detail::fail("reference." + key, "unknown field");
    }
    if (!r.contains("alpha")) detail::fail("reference.alpha", "missing");
    ReferenceSpec spec;
    spec.params.alpha = parse_number(r.at("alpha"), "reference.alpha");
    if (r.contains("ds")) {
        if (!r.at("ds").is_boolean()) detail::fail("reference.ds", "expected true or false");
        spec.ds = r.at("ds").get<bool>();
    }
    if (spec.ds && r.contains("beta")) detail::fail("reference", "give either beta or ds, not both");
    if (!spec.ds && !r.contains("beta")) detail::fail("reference.beta", "missing (or set ds: true)");
    try {
        reference::check_alpha(spec.params.alpha);
    } catch (const ParamsOutOfRange& e) {
        detail::fail("reference.alpha", e.what());
    }
    if (spec.ds) {
        spec.params.beta = reference::ds_beta(spec.params.alpha);
    } else {
        spec.params.beta = parse_number(r.at("beta"), "reference.beta");
        try {
            reference::check_beta(spec.params.beta);
        } catch (const ParamsOutOfRange& e) {
            detail::fail("reference.beta", e.what());
        }
    }
    return spec;
}

inline ModelConfig parse(const json& root) {
    if (!root.is_object()) detail::fail("<root>", "expected a JSON object");
    static const std::set<std::string> known{"a", "b", "g0", "g1", "reference", "description"};
    for (const auto& [key, value] : root.items()) {
        if (!known.contains(key)) detail::fail(key, "unknown field");
    }
    if (root.contains("reference")) {
        for (const char* key : {"a", "b", "g0", "g1"}) {
            if (root.contains(key)) detail::fail(key, "not allowed together with reference");
        }
        auto spec = parse_reference(root.at("reference"));
        return {reference::build(spec.params), spec};
    }
    auto a = parse_observable(root, "a");
    auto b = parse_observable(root, "b");
    const double pb1 = measure(b.ones());
    if (!(pb1 > 0.0 && pb1 < 1.0)) detail::fail("b.ones", "probability of {b=1} must lie strictly in (0,1)");
    auto g0 = parse_filter(root, "g0", b.zeros());
    auto g1 = parse_filter(root, "g1", b.ones());
    try {
        return {EnsembleModel(std::move(a), std::move(b), std::move(g0), std::move(g1)), std::nullopt};
    } catch (const InvalidModel& e) {
        detail::fail("model", e.what());
    }
}

inline ModelConfig parse_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidConfig(std::string("<document>: ") + e.what());
    }
    return parse(root);
}

inline ModelConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

inline json to_json(const IntervalSet& s) {
    json out = json::array();
    for (const auto& iv : s.intervals()) out.push_back({iv.lo, iv.hi});
    return out;
}

inline json to_json(const PiecewiseAffineMap& g) {
    json pieces = json::array();
    for (const auto& p : g.pieces())
        pieces.push_back({{"src", {p.src.lo, p.src.hi}}, {"dst", {p.dst.lo, p.dst.hi}}});
    return {{"pieces", pieces}};
}

/// Explicit form of a model; parse(dump(m)).model == m.
inline json dump(const EnsembleModel& m) {
    return {{"a", {{"ones", to_json(m.a().ones())}}},
            {"b", {{"ones", to_json(m.b().ones())}}},
            {"g0", to_json(m.g0())},
            {"g1", to_json(m.g1())}};
}

inline json to_json(const ReferenceSpec& r) {
    json out{{"alpha", r.params.alpha}, {"beta", r.params.beta}};
    if (r.ds) out["ds"] = true;
    return out;
}

}  // namespace interference::config
