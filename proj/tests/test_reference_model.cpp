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

#include <cmath>

#include <gtest/gtest.h>

#include "interference/analysis.hpp"
#include "interference/reference_model.hpp"
#include "oracles.hpp"

namespace interference {
namespace {

using namespace reference;

TEST(Build, PreciseFiltrationIsIdentityPiecewise) {
    const auto m = build({0.25, 0.75});
    for (const auto* g : {&m.g0(), &m.g1()})
        for (const auto& p : g->pieces()) EXPECT_EQ(p.src, p.dst);
}

TEST(Build, JointsDoNotDependOnParameters) {
    for (auto p : {Params{0.01, 0.34}, Params{0.2, 0.5}, Params{0.33, 0.99}}) {
        const auto m = build(p);
        const Mat2 pj = joint_ab(m);
        EXPECT_NEAR(pj[0][1], 5.0 / 12.0, 1e-15);
        EXPECT_NEAR(pj[0][0], 0.25, 1e-15);
        EXPECT_NEAR(pj[1][1], 1.0 / 12.0, 1e-15);
        EXPECT_NEAR(pj[1][0], 0.25, 1e-15);
        const Mat2 q = pushforward_joint(m);
        EXPECT_NEAR(q[1][0], p.alpha, 1e-15);
        EXPECT_NEAR(q[0][0], 1 - p.beta, 1e-15);
    }
}

TEST(Build, RejectsOutOfRange) {
    EXPECT_THROW(build({0.0, 0.5}), ParamsOutOfRange);
    EXPECT_THROW(build({1.0 / 3.0, 0.5}), ParamsOutOfRange);
    EXPECT_THROW(build({0.35, 0.5}), ParamsOutOfRange);
    EXPECT_THROW(build({0.2, 1.0 / 3.0}), ParamsOutOfRange);
    EXPECT_THROW(build({0.2, 1.0}), ParamsOutOfRange);
}

TEST(DsBeta, Values) {
    EXPECT_NEAR(ds_beta(1.0 / 6.0), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(ds_beta(0.25), 5.0 / 6.0, 1e-15);
    EXPECT_NEAR(ds_beta(1e-12), 1.0 / 3.0, 1e-11);
    EXPECT_GT(ds_beta(1e-12), 1.0 / 3.0);
    EXPECT_LT(ds_beta(1.0 / 3.0 - 1e-12), 1.0);
    EXPECT_THROW(ds_beta(0.0), ParamsOutOfRange);
    EXPECT_THROW(ds_beta(0.4), ParamsOutOfRange);
}

TEST(DsBeta, LiftedMatrixIsDoubleStochastic) {
    for (int k = 1; k < 300; ++k) {
        const double alpha = k / 900.0;
        const auto r = probability_report(build(ds_params(alpha)));
        ASSERT_TRUE(check_double_stochastic(r.q_cond, 1e-12));
        ASSERT_NEAR(r.q_cond[0][0], 1 - 3 * alpha, 1e-12);
        ASSERT_NEAR(r.q_cond[0][1], 3 * alpha, 1e-12);
        ASSERT_NEAR(r.q_cond[1][0], 3 * alpha, 1e-12);
        ASSERT_NEAR(r.q_cond[1][1], 1 - 3 * alpha, 1e-12);
    }
}

TEST(LambdaClosed, Values) {
    const Vec2 classical = lambda_closed({0.25, 0.75});
    EXPECT_EQ(classical[0], 0.0);
    EXPECT_EQ(classical[1], 0.0);
    for (double alpha : {0.05, 0.1, 0.2, 0.3}) {
        const Vec2 l = lambda_closed({alpha, alpha + 0.5});
        EXPECT_NEAR(l[0], 0.0, 1e-15);
        EXPECT_NEAR(l[1], 0.0, 1e-15);
    }
    // (0.9 - 0.05 - 0.5) / (2 sqrt(0.05 * 0.1))
    EXPECT_NEAR(lambda_closed({0.05, 0.9})[0], 0.35 / (2 * std::sqrt(0.005)), 1e-12);
    EXPECT_NEAR(lambda_closed({0.05, 0.9})[0], 2.4748737341529163, 1e-12);
}

TEST(LambdaClosed, MatchesEngineOnGrid) {
    for (int i = 0; i < 10; ++i)
        for (int k = 0; k < 10; ++k) {
            const Params p{0.02 + 0.03 * i, 0.36 + 0.065 * k};
            const auto r = analyze(build(p));
            const Vec2 closed = lambda_closed(p);
            ASSERT_NEAR(r.deviation->lambda[0], closed[0], 1e-12) << p.alpha << "," << p.beta;
            ASSERT_NEAR(r.deviation->lambda[1], closed[1], 1e-12) << p.alpha << "," << p.beta;
        }
}

TEST(Lambda0Ds, Values) {
    EXPECT_EQ(lambda0_ds(1.0 / 6.0), 0.0);
    const auto t = thresholds();
    EXPECT_NEAR(lambda0_ds(t.alpha_plus), 1.0, 1e-12);
    EXPECT_NEAR(lambda0_ds(t.alpha_minus), -1.0, 1e-12);
    EXPECT_NEAR(lambda0_ds(0.25), std::sqrt(6.0) / 12.0, 1e-15);
    EXPECT_NEAR(lambda0_ds(0.25), testing::lambda0_from_joints(0.25), 1e-15);
    for (int k = 1; k < 100; ++k) {
        const double alpha = k / 300.0;
        ASSERT_NEAR(lambda0_ds(alpha), lambda_closed(ds_params(alpha))[0], 1e-12);
        ASSERT_NEAR(lambda0_ds(alpha), -lambda_closed(ds_params(alpha))[1], 1e-12);
    }
}

TEST(Lambda0Ds, MonotoneWithDivergentEnds) {
    double prev = lambda0_ds(1e-4);
    for (int k = 2; k < 3333; ++k) {
        const double v = lambda0_ds(k * 1e-4);
        ASSERT_GT(v, prev);
        prev = v;
    }
    EXPECT_LT(lambda0_ds(1e-9), -100.0);
    EXPECT_GT(lambda0_ds(1.0 / 3.0 - 1e-9), 100.0);
}

TEST(Thresholds, ClosedForms) {
    const auto t = thresholds();
    EXPECT_NEAR(t.alpha_minus, (3 - 2 * std::sqrt(2.0)) / 18, 1e-17);
    EXPECT_NEAR(t.alpha_plus, 0.3238015069303439, 1e-15);
    EXPECT_NEAR(t.alpha_minus, 0.009531826402989428, 1e-15);
    EXPECT_NEAR(t.alpha_minus + t.alpha_plus, 1.0 / 3.0, 1e-15);
    // roots of 324 a^2 - 108 a + 1
    for (double a : {t.alpha_minus, t.alpha_plus}) EXPECT_NEAR(324 * a * a - 108 * a + 1, 0.0, 1e-12);
    EXPECT_NEAR(xi_max(), 0.1571348402636772, 1e-15);
}

TEST(PerturbationMeasures, Values) {
    const auto dec = perturbation_measures(ds_params(1.0 / 6.0));
    EXPECT_NEAR(dec.pi0, 1.0 / 12.0, 1e-15);
    EXPECT_NEAR(dec.pi1, 1.0 / 12.0, 1e-15);
    EXPECT_NEAR(dec.xi_asym, 0.0, 1e-15);

    const auto t = thresholds();
    for (double a : {t.alpha_minus, t.alpha_plus})
        EXPECT_NEAR(perturbation_measures(ds_params(a)).xi_asym, std::sqrt(2.0) / 9.0, 1e-12);

    const auto precise = perturbation_measures({0.25, 0.75});
    EXPECT_EQ(precise.pi0, 0.0);
    EXPECT_EQ(precise.pi1, 0.0);

    for (int k = 1; k < 100; ++k) {
        const double a = k / 300.0;
        ASSERT_NEAR(perturbation_measures(ds_params(a)).xi_asym, std::abs(a - 1.0 / 6.0), 1e-15);
    }
}

TEST(Sweep, DoubleStochasticRegimes) {
    const auto rows = sweep({0.02, 0.32, 0.01}, true, std::nullopt);
    ASSERT_EQ(rows.size(), 31u);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        ASSERT_GT(rows[k].alpha, rows[k - 1].alpha);
        ASSERT_GT(rows[k].lambda0, rows[k - 1].lambda0);
    }
    const auto t = thresholds();
    for (const auto& r : rows) {
        EXPECT_NEAR(r.lambda1, -r.lambda0, 1e-12);
        if (r.alpha > t.alpha_minus && r.alpha < t.alpha_plus) {
            EXPECT_EQ(r.regime, Regime::Trigonometric) << r.alpha;
            EXPECT_EQ(r.phase_kind, PhaseKind::Circular);
        }
    }
    const auto low = sweep({0.001, 0.009, 0.001}, true, std::nullopt);
    for (const auto& r : low) {
        EXPECT_EQ(r.regime, Regime::Hyperbolic);
        EXPECT_LT(r.lambda0, -1.0);
        EXPECT_EQ(r.phase_kind, PhaseKind::Hyperbolic);
    }
}

TEST(Sweep, ConventionalOnlyAtDecoherence) {
    const auto rows = sweep({1.0 / 6.0 - 0.05, 1.0 / 6.0 + 0.05, 0.05}, true, std::nullopt);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1].regime, Regime::Conventional);
    EXPECT_EQ(rows[0].regime, Regime::Trigonometric);
    EXPECT_EQ(rows[2].regime, Regime::Trigonometric);
}

TEST(Sweep, BoundaryAtThreshold) {
    const auto t = thresholds();
    const auto row = sweep_row(ds_params(t.alpha_plus));
    EXPECT_EQ(row.regime, Regime::Boundary);
}

TEST(Sweep, FixedBetaAndErrors) {
    const auto rows = sweep({0.1, 0.3, 0.1}, false, 0.6);
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& r : rows) EXPECT_EQ(r.beta, 0.6);
    EXPECT_THROW(sweep({0.1, 0.3, 0.1}, false, std::nullopt), ParamsOutOfRange);
    EXPECT_THROW(sweep({0.1, 0.3, 0.1}, false, 1.2), ParamsOutOfRange);
    EXPECT_THROW(sweep({0.5, 0.6, 0.01}, true, std::nullopt), ParamsOutOfRange);
    EXPECT_THROW(sweep({0.0, 0.2, 0.01}, true, std::nullopt), ParamsOutOfRange);
    EXPECT_THROW(sweep({0.1, 0.4, 0.01}, true, std::nullopt), ParamsOutOfRange);
    EXPECT_THROW(sweep({0.2, 0.1, 0.01}, true, std::nullopt), ParamsOutOfRange);
    EXPECT_THROW(sweep({0.1, 0.2, 0.0}, true, std::nullopt), ParamsOutOfRange);
}

}  // namespace
}  // namespace interference
