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

#pragma once

#include <string>
#include <utility>

#include "interference/errors.hpp"
#include "interference/interval_set.hpp"
#include "interference/piecewise_affine.hpp"
#include "interference/probability.hpp"

namespace interference {

/// Observables a, b on ([0,1), Lebesgue) together with the two preparation
/// filters: g0 acts on {b=0}, g1 on {b=1}, each mapping its set onto itself.
class EnsembleModel {
public:
    /// Throws InvalidModel if a filter has violations, its domain is not the
    /// matching b-event, or one of the b-events is null.
    EnsembleModel(DichotomicObservable a, DichotomicObservable b, PiecewiseAffineMap g0,
                  PiecewiseAffineMap g1)
        : a_(std::move(a)), b_(std::move(b)), g_{std::move(g0), std::move(g1)} {
        const double pb1 = measure(b_.ones());
        if (!(pb1 > 0.0 && pb1 < 1.0)) {
            throw InvalidModel("the event {b=1} must have probability strictly in (0,1)");
        }
        for (int i = 0; i < 2; ++i) {
            const auto name = "g" + std::to_string(i);
            if (g_[i].domain() != b_.event(i)) {
                throw InvalidModel(name + ": domain must equal the event {b=" +
                                   std::to_string(i) + "}");
            }
            auto violations = validate(g_[i]);
            if (!violations.empty()) {
                throw InvalidModel(name + ": " + std::string(to_string(violations.front().kind)) +
                                   " (" + violations.front().message + ")");
            }
        }
    }

    /// Model whose filters leave every point in place.
    static EnsembleModel unperturbed(DichotomicObservable a, DichotomicObservable b) {
        auto g0 = PiecewiseAffineMap::identity(b.zeros());
        auto g1 = PiecewiseAffineMap::identity(b.ones());
        return EnsembleModel(std::move(a), std::move(b), std::move(g0), std::move(g1));
    }

    const DichotomicObservable& a() const noexcept { return a_; }
    const DichotomicObservable& b() const noexcept { return b_; }
    const PiecewiseAffineMap& filter(int i) const noexcept { return g_[i]; }
    const PiecewiseAffineMap& g0() const noexcept { return g_[0]; }
    const PiecewiseAffineMap& g1() const noexcept { return g_[1]; }

    friend bool operator==(const EnsembleModel&, const EnsembleModel&) = default;

private:
    DichotomicObservable a_;
    DichotomicObservable b_;
    std::array<PiecewiseAffineMap, 2> g_;
};

inline Vec2 marginal_b(const EnsembleModel& m) noexcept { return m.b().distribution(); }
inline Vec2 marginal_a(const EnsembleModel& m) noexcept { return m.a().distribution(); }

/// p_{ij}^{ab} = P(a = j, b = i).
inline Mat2 joint_ab(const EnsembleModel& m) {
    Mat2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = measure(intersect(m.a().event(j), m.b().event(i)));
    return out;
}

/// q_{ij}^{ab} = P(a(g_i(w)) = j, b(w) = i).
inline Mat2 pushforward_joint(const EnsembleModel& m) {
    Mat2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = measure(intersect(preimage(m.filter(i), m.a().event(j)), m.b().event(i)));
    return out;
}

/// q_{ij}^{a/b} = q_{ij}^{ab} / p_i^b.
inline Mat2 lifted_conditional(const Mat2& q_joint, const Vec2& marginal_b) {
    return conditional(q_joint, marginal_b);
}

}  // namespace interference
