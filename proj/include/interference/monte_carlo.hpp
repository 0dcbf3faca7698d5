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

// Seeded Monte Carlo estimation of the probabilities of an EnsembleModel.
//
// Each stream owns a std::mt19937_64 seeded from (seed, stream index) through
// std::seed_seq; both algorithms are fixed by the standard, so results are
// reproducible across platforms. Tallies are integer counts merged in stream
// order, so the outcome does not depend on thread scheduling.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "interference/analysis.hpp"
#include "interference/deviation.hpp"
#include "interference/ensemble.hpp"
#include "interference/errors.hpp"

namespace interference::mc {

struct Config {
    std::uint64_t seed = 42;
    std::uint64_t samples = 1'000'000;
    unsigned streams = 1;
};

inline void check(const Config& c) {
    if (c.samples < 1) throw InvalidConfig("samples must be at least 1");
    if (c.streams < 1) throw InvalidConfig("streams must be at least 1");
}

/// Counts indexed [b(w)][a(w)][a(g_b(w))].
struct Tally {
    std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2> cells{};

    std::uint64_t total() const noexcept {
        std::uint64_t n = 0;
        for (const auto& i : cells)
            for (const auto& k : i)
                for (auto c : k) n += c;
        return n;
    }

    Tally& operator+=(const Tally& o) noexcept {
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) cells[i][k][l] += o.cells[i][k][l];
        return *this;
    }

    friend bool operator==(const Tally&, const Tally&) = default;
};

/// Generator for one stream; distinct streams get unrelated seeds.
inline std::mt19937_64 stream_engine(std::uint64_t seed, unsigned stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

/// Uniform on [0,1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) noexcept {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Tally run_stream(const EnsembleModel& model, std::uint64_t seed, unsigned stream,
                        std::uint64_t samples) {
    auto rng = stream_engine(seed, stream);
    Tally t;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const double w = uniform01(rng);
        const int b = model.b()(w);
        const int a = model.a()(w);
        const int lifted = model.a()(apply(model.filter(b), w));
        ++t.cells[b][a][lifted];
    }
    return t;
}

/// Samples per stream; the remainder goes to the last stream.
inline std::vector<std::uint64_t> stream_sizes(const Config& c) {
    std::vector<std::uint64_t> sizes(c.streams, c.samples / c.streams);
    sizes.back() += c.samples % c.streams;
    return sizes;
}

inline Tally tally(const EnsembleModel& model, const Config& config) {
    check(config);
    const auto sizes = stream_sizes(config);
    std::vector<Tally> parts(config.streams);
    if (config.streams == 1) {
        parts[0] = run_stream(model, config.seed, 0, sizes[0]);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(config.streams);
        for (unsigned k = 0; k < config.streams; ++k) {
            workers.emplace_back([&, k] { parts[k] = run_stream(model, config.seed, k, sizes[k]); });
        }
    }
    Tally total;
    for (const auto& p : parts) total += p;
    return total;
}

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
};

inline Estimate binomial(std::uint64_t hits, std::uint64_t n) noexcept {
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

using Estimate2 = std::array<Estimate, 2>;
using EstimateMat2 = std::array<Estimate2, 2>;
using OptionalMat2 = std::array<std::array<std::optional<Estimate>, 2>, 2>;

/// Empirical counterpart of ProbabilityReport. Conditional cells and lambdas
/// are nullopt when their conditioning count or denominator is zero.
struct EmpiricalReport {
    Config config;
    Tally counts;
    Estimate2 p_b{};
    Estimate2 p_a{};
    EstimateMat2 p_joint{};
    EstimateMat2 q_joint{};
    OptionalMat2 p_cond{};
    OptionalMat2 q_cond{};
    std::array<std::optional<Estimate>, 2> lambda{};

    template <class M>
    static Mat2 values(const M& m) {
        Mat2 out{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out[i][j] = value_of(m[i][j]);
        return out;
    }

private:
    static double value_of(const Estimate& e) { return e.value; }
    static double value_of(const std::optional<Estimate>& e) { return e ? e->value : NAN; }
};

namespace detail {

/// First-order (delta-method) standard error of lambda_j over the multinomial
/// cell frequencies; p and q tallies share samples, so the covariance matters.
inline double lambda_std_error(const Tally& t, int j, double lambda, double q0, double q1) {
    const double n = static_cast<double>(t.total());
    const double d = 2.0 * std::sqrt(q0 * q1);
    double mean = 0.0, second = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                double g = (k == j) ? 1.0 / d : 0.0;
                if (l == j) g -= 1.0 / d + lambda / (2.0 * (i == 0 ? q0 : q1));
                const double pi = static_cast<double>(t.cells[i][k][l]) / n;
                mean += pi * g;
                second += pi * g * g;
            }
    return std::sqrt(std::max(0.0, second - mean * mean) / n);
}

}  // namespace detail

inline EmpiricalReport summarize(const Tally& t, const Config& config) {
    EmpiricalReport r;
    r.config = config;
    r.counts = t;
    const std::uint64_t n = t.total();
    std::array<std::array<std::uint64_t, 2>, 2> pj{}, qj{};
    std::array<std::uint64_t, 2> nb{}, na{};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                const auto c = t.cells[i][k][l];
                pj[i][k] += c;
                qj[i][l] += c;
                nb[i] += c;
                na[k] += c;
            }
    for (int i = 0; i < 2; ++i) {
        r.p_b[i] = binomial(nb[i], n);
        r.p_a[i] = binomial(na[i], n);
        for (int j = 0; j < 2; ++j) {
            r.p_joint[i][j] = binomial(pj[i][j], n);
            r.q_joint[i][j] = binomial(qj[i][j], n);
            if (nb[i] > 0) {
                r.p_cond[i][j] = binomial(pj[i][j], nb[i]);
                r.q_cond[i][j] = binomial(qj[i][j], nb[i]);
            }
        }
    }
    const Mat2 p_hat = EmpiricalReport::values(r.p_joint);
    const Mat2 q_hat = EmpiricalReport::values(r.q_joint);
    for (int j = 0; j < 2; ++j) {
        if (auto lambda = normalized_deviation_joint_at(p_hat, q_hat, j)) {
            r.lambda[j] = Estimate{
                *lambda, detail::lambda_std_error(t, j, *lambda, q_hat[0][j], q_hat[1][j]), n};
        }
    }
    return r;
}

/// Draws w uniformly on [0,1) and tallies b(w), a(w) and a(g_{b(w)}(w)).
inline EmpiricalReport simulate(const EnsembleModel& model, const Config& config) {
    return summarize(tally(model, config), config);
}

struct QuantityCheck {
    std::string name;
    double analytic = 0.0;
    double empirical = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
    bool compared = false;  ///< false when either side is undefined
    bool pass = false;
};

struct ComparisonResult {
    std::vector<QuantityCheck> checks;
    std::vector<std::string> discrepancies;
    bool passed = true;
};

/// Passes a quantity when |analytic - empirical| <= k_sigma * std_error.
inline ComparisonResult compare(const ProbabilityReport& analytic, const EmpiricalReport& empirical,
                                double k_sigma) {
    ComparisonResult out;
    auto add = [&](std::string name, std::optional<double> a, const std::optional<Estimate>& e) {
        QuantityCheck c;
        c.name = std::move(name);
        if (a) c.analytic = *a;
        if (e) {
            c.empirical = e->value;
            c.std_error = e->std_error;
            c.n = e->n;
        }
        c.compared = a.has_value() && e.has_value();
        if (c.compared) {
            c.pass = std::abs(c.analytic - c.empirical) <= k_sigma * c.std_error;
            if (!c.pass) {
                out.passed = false;
                out.discrepancies.push_back(c.name);
            }
        }
        out.checks.push_back(std::move(c));
    };
    auto idx1 = [](const char* base, int i) {
        return std::string(base) + "[" + std::to_string(i) + "]";
    };
    auto idx2 = [](const char* base, int i, int j) {
        return std::string(base) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
    };

    for (int i = 0; i < 2; ++i) add(idx1("p_b", i), analytic.p_b[i], empirical.p_b[i]);
    for (int j = 0; j < 2; ++j) add(idx1("p_a", j), analytic.p_a[j], empirical.p_a[j]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            add(idx2("p_joint", i, j), analytic.p_joint[i][j], empirical.p_joint[i][j]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            add(idx2("q_joint", i, j), analytic.q_joint[i][j], empirical.q_joint[i][j]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            add(idx2("p_cond", i, j), analytic.p_cond[i][j], empirical.p_cond[i][j]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            add(idx2("q_cond", i, j), analytic.q_cond[i][j], empirical.q_cond[i][j]);
    for (int j = 0; j < 2; ++j) {
        std::optional<double> a;
        if (analytic.deviation) a = analytic.deviation->lambda[j];
        add(idx1("lambda", j), a, empirical.lambda[j]);
    }
    return out;
}

}  // namespace interference::mc
