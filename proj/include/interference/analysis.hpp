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

#include <optional>

#include "interference/deviation.hpp"
#include "interference/ensemble.hpp"
#include "interference/errors.hpp"

namespace interference {

/// Every probability of a model plus its deviation analysis.
struct ProbabilityReport {
    Vec2 p_b{};
    Vec2 p_a{};
    Mat2 p_joint{};
    Mat2 p_cond{};
    Mat2 q_joint{};
    Mat2 q_cond{};
    bool stochastic = true;
    bool double_stochastic = false;
    /// Absent when some normalized deviation has a vanishing denominator.
    std::optional<DeviationReport> deviation;
    std::optional<Mat2> xi;
    std::optional<int> degenerate_outcome;
};

/// Full report; degeneracy is recorded in the report rather than thrown.
inline ProbabilityReport probability_report(const EnsembleModel& model,
                                            double tol = kDefaultRegimeTolerance) {
    ProbabilityReport r;
    r.p_b = marginal_b(model);
    r.p_a = marginal_a(model);
    r.p_joint = joint_ab(model);
    r.p_cond = conditional(r.p_joint, r.p_b);
    r.q_joint = pushforward_joint(model);
    r.q_cond = lifted_conditional(r.q_joint, r.p_b);
    r.stochastic = check_stochastic(r.q_cond);
    r.double_stochastic = check_double_stochastic(r.q_cond);
    try {
        r.deviation = deviation_report(r.p_b, r.p_cond, r.q_cond, tol);
        r.xi = xi_coefficients(r.p_joint, r.q_joint, r.p_b, r.q_cond);
    } catch (const DegenerateDenominator& e) {
        r.degenerate_outcome = e.outcome();
    }
    return r;
}

/// Like probability_report but throws DegenerateDenominator for degenerate models.
inline ProbabilityReport analyze(const EnsembleModel& model, double tol = kDefaultRegimeTolerance) {
    auto r = probability_report(model, tol);
    if (r.degenerate_outcome) throw DegenerateDenominator(*r.degenerate_outcome);
    return r;
}

}  // namespace interference
