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

#include <algorithm>

#include <gtest/gtest.h>

#include "interference/ensemble.hpp"
#include "interference/piecewise_affine.hpp"
#include "interference/reference_model.hpp"
#include "oracles.hpp"
#include "random_models.hpp"

namespace interference {
namespace {

constexpr double kThird = 1.0 / 3.0;

bool has(const std::vector<Violation>& v, ViolationKind k) {
    return std::any_of(v.begin(), v.end(), [k](const Violation& x) { return x.kind == k; });
}

TEST(Apply, IdentityMap) {
    const auto id = PiecewiseAffineMap::identity(IntervalSet::full());
    EXPECT_EQ(apply(id, 0.5), 0.5);
}

TEST(Apply, ReferenceFilters) {
    const auto m = reference::build({1.0 / 6.0, 2.0 / 3.0});
    // [0, 1/6) -> [0, 1/4) has slope 3/2
    EXPECT_NEAR(apply(m.g1(), 1.0 / 12.0), 1.0 / 8.0, 1e-15);
    const auto m2 = reference::build({0.25, 5.0 / 6.0});
    EXPECT_EQ(apply(m2.g0(), kThird), kThird);
}

TEST(Apply, OutsideDomainThrows) {
    const auto m = reference::build({0.2, 0.6});
    EXPECT_THROW(apply(m.g1(), 0.5), PointOutsideDomain);
    EXPECT_THROW(apply(m.g0(), 0.1), PointOutsideDomain);
    EXPECT_THROW(apply(m.g0(), 1.0), PointOutsideDomain);
}

TEST(Apply, ImageStaysInsideOwnPiece) {
    const auto m = reference::build({0.1, 0.9});
    const double just_below = std::nextafter(0.1, 0.0);
    EXPECT_LT(apply(m.g1(), just_below), 0.25);
    EXPECT_GE(apply(m.g1(), 0.1), 0.25);
}

TEST(Preimage, IdentityIsIntersectionWithDomain) {
    const IntervalSet domain({{0.1, 0.5}});
    const auto id = PiecewiseAffineMap::identity(domain);
    const IntervalSet t({{0.0, 0.3}, {0.4, 0.9}});
    EXPECT_EQ(preimage(id, t), intersect(t, domain));
}

TEST(Preimage, ReferenceEndpoints) {
    for (double alpha : {0.01, 0.1, 1.0 / 6.0, 0.3}) {
        const auto m = reference::build(reference::ds_params(alpha));
        EXPECT_EQ(preimage(m.g1(), IntervalSet({{0.0, 0.25}})), IntervalSet({{0.0, alpha}}));
        const double beta = reference::ds_beta(alpha);
        EXPECT_EQ(preimage(m.g0(), IntervalSet({{0.75, 1.0}})), IntervalSet({{beta, 1.0}}));
    }
}

TEST(Preimage, ReorderingMap) {
    // swaps the halves of [0, 1)
    PiecewiseAffineMap swap({{{0.0, 0.5}, {0.5, 1.0}}, {{0.5, 1.0}, {0.0, 0.5}}},
                            IntervalSet::full());
    EXPECT_TRUE(validate(swap).empty());
    EXPECT_EQ(preimage(swap, IntervalSet({{0.0, 0.25}})), IntervalSet({{0.5, 0.75}}));
    EXPECT_DOUBLE_EQ(apply(swap, 0.1), 0.6);
}

TEST(Validate, IdentityIsClean) {
    EXPECT_TRUE(validate(PiecewiseAffineMap::identity(IntervalSet({{0.2, 0.4}, {0.6, 1.0}}))).empty());
}

TEST(Validate, OverlappingTargets) {
    PiecewiseAffineMap g({{{0.0, 0.5}, {0.0, 0.6}}, {{0.5, 1.0}, {0.4, 1.0}}}, IntervalSet::full());
    const auto v = validate(g);
    EXPECT_TRUE(has(v, ViolationKind::OverlappingTargets));
    EXPECT_FALSE(has(v, ViolationKind::OverlappingSources));
}

TEST(Validate, DomainNotCovered) {
    PiecewiseAffineMap g({{{0.0, 0.4}, {0.0, 1.0}}}, IntervalSet::full());
    const auto v = validate(g);
    EXPECT_TRUE(has(v, ViolationKind::DomainNotCovered));
    EXPECT_FALSE(has(v, ViolationKind::RangeNotCovered));
}

TEST(Validate, ZeroSlopeAndOutOfRangePieces) {
    PiecewiseAffineMap flat({{{0.0, 0.5}, {0.3, 0.3}}, {{0.5, 1.0}, {0.0, 1.0}}},
                            IntervalSet::full());
    const auto v = validate(flat);
    ASSERT_TRUE(has(v, ViolationKind::NonPositiveSlope));
    EXPECT_EQ(v.front().piece, 0);

    PiecewiseAffineMap outside({{{0.0, 1.0}, {0.5, 1.5}}}, IntervalSet::full());
    EXPECT_TRUE(has(validate(outside), ViolationKind::OutsideUnitInterval));

    PiecewiseAffineMap leaves({{{0.0, 0.5}, {0.5, 0.9}}}, IntervalSet({{0.0, 0.5}}));
    EXPECT_TRUE(has(validate(leaves), ViolationKind::TargetOutsideDomain));
}

TEST(PushforwardJoint, ReferenceValues) {
    for (auto p : {reference::Params{0.1, 0.5}, reference::Params{0.3, 0.95},
                   reference::Params{1.0 / 6.0, 2.0 / 3.0}}) {
        const Mat2 q = pushforward_joint(reference::build(p));
        EXPECT_NEAR(q[0][1], p.beta - kThird, 1e-15);
        EXPECT_NEAR(q[0][0], 1.0 - p.beta, 1e-15);
        EXPECT_NEAR(q[1][0], p.alpha, 1e-15);
        EXPECT_NEAR(q[1][1], kThird - p.alpha, 1e-15);
    }
}

TEST(LiftedConditional, ReferenceValues) {
    const reference::Params p{0.12, 0.55};
    const auto m = reference::build(p);
    const Mat2 qc = lifted_conditional(pushforward_joint(m), marginal_b(m));
    EXPECT_NEAR(qc[0][1], (3 * p.beta - 1) / 2, 1e-15);
    EXPECT_NEAR(qc[0][0], (3 - 3 * p.beta) / 2, 1e-15);
    EXPECT_NEAR(qc[1][0], 3 * p.alpha, 1e-15);
    EXPECT_NEAR(qc[1][1], 1 - 3 * p.alpha, 1e-15);
}

TEST(LiftedConditional, IdentityFiltersReproduceConditionals) {
    const auto m = reference::build({0.25, 0.75});
    const Vec2 pb = marginal_b(m);
    EXPECT_EQ(pushforward_joint(m), joint_ab(m));
    const Mat2 qc = lifted_conditional(pushforward_joint(m), pb);
    EXPECT_NEAR(qc[0][1], 5.0 / 8.0, 1e-15);
    EXPECT_NEAR(qc[1][1], 1.0 / 4.0, 1e-15);
}

TEST(FilterProperty, PreimageMeasureMatchesGridOracle) {
    testing::Rng rng(21);
    for (int k = 0; k < 20; ++k) {
        const auto domain = testing::random_interval_set(rng);
        const auto g = testing::random_filter(rng, domain);
        ASSERT_TRUE(validate(g).empty());
        const auto target = testing::random_interval_set(rng, 3);
        const double exact = measure(preimage(g, target));
        const double counted = testing::grid_measure(
            [&](double x) { return domain.contains(x) && target.contains(apply(g, x)); });
        ASSERT_NEAR(exact, counted, 2e-3);
    }
}

TEST(FilterProperty, PreimageScalesPiecewise) {
    testing::Rng rng(22);
    for (int k = 0; k < 200; ++k) {
        const auto domain = testing::random_interval_set(rng);
        const auto g = testing::random_filter(rng, domain);
        const auto target = testing::random_interval_set(rng, 3);
        const auto pre = preimage(g, target);
        for (const auto& piece : g.pieces()) {
            const double restricted = measure(intersect(pre, IntervalSet({piece.src})));
            const double scaled = measure(intersect(target, IntervalSet({piece.dst}))) *
                                  (piece.src.length() / piece.dst.length());
            ASSERT_NEAR(restricted, scaled, 1e-12);
        }
    }
}

TEST(FilterProperty, BijectiveOnDomain) {
    testing::Rng rng(23);
    for (int k = 0; k < 500; ++k) {
        const auto domain = testing::random_interval_set(rng);
        const auto g = testing::random_filter(rng, domain);
        ASSERT_EQ(preimage(g, domain), domain);
    }
}

TEST(FilterProperty, PushforwardRowsMatchBMarginalAndIdentityIsExact) {
    testing::Rng rng(24);
    for (int k = 0; k < 1000; ++k) {
        const auto m = testing::random_model(rng);
        const Mat2 q = pushforward_joint(m);
        const Vec2 pb = marginal_b(m);
        ASSERT_NEAR(q[0][0] + q[0][1], pb[0], 1e-12);
        ASSERT_NEAR(q[1][0] + q[1][1], pb[1], 1e-12);
        const auto u = EnsembleModel::unperturbed(m.a(), m.b());
        ASSERT_EQ(pushforward_joint(u), joint_ab(u));
    }
}

}  // namespace
}  // namespace interference
