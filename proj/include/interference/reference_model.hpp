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

// Two-parameter reference family on [0,1):
//   b = 1 on [0, 1/3),  a = 1 on [1/4, 3/4),
//   g1: [0, alpha) -> [0, 1/4),  [alpha, 1/3) -> [1/4, 1/3)
//   g0: [1/3, beta) -> [1/3, 3/4),  [beta, 1) -> [3/4, 1)
// with 0 < alpha < 1/3 < beta < 1.

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "interference/deviation.hpp"
#include "interference/ensemble.hpp"
#include "interference/errors.hpp"

namespace interference::reference {

inline constexpr double kThird = 1.0 / 3.0;
inline constexpr double kDecoherenceAlpha = 1.0 / 6.0;

struct Params {
    double alpha = 0.25;
    double beta = 0.75;

    friend bool operator==(const Params&, const Params&) = default;
};

inline void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < kThird)) throw ParamsOutOfRange("alpha out of (0, 1/3)");
}

inline void check_beta(double beta) {
    if (!(beta > kThird && beta < 1.0)) throw ParamsOutOfRange("beta out of (1/3, 1)");
}

inline void check(const Params& p) {
    check_alpha(p.alpha);
    check_beta(p.beta);
}

/// beta making the lifted conditional matrix double stochastic.
inline double ds_beta(double alpha) {
    check_alpha(alpha);
    return kThird + 2.0 * alpha;
}

inline Params ds_params(double alpha) { return {alpha, ds_beta(alpha)}; }

inline EnsembleModel build(const Params& p) {
    check(p);
    DichotomicObservable b(IntervalSet({{0.0, kThird}}));
    DichotomicObservable a(IntervalSet({{0.25, 0.75}}));
    PiecewiseAffineMap g1({{{0.0, p.alpha}, {0.0, 0.25}}, {{p.alpha, kThird}, {0.25, kThird}}},
                          b.ones());
    PiecewiseAffineMap g0({{{kThird, p.beta}, {kThird, 0.75}}, {{p.beta, 1.0}, {0.75, 1.0}}},
                          b.zeros());
    return EnsembleModel(std::move(a), std::move(b), std::move(g0), std::move(g1));
}

/// Closed-form normalized deviations of the family.
inline Vec2 lambda_closed(const Params& p) {
    check(p);
    const double a = p.alpha;
    const double b = p.beta;
    return {(b - a - 0.5) / (2.0 * std::sqrt(a * (1.0 - b))),
            (0.5 + a - b) / (2.0 * std::sqrt((b - kThird) * (kThird - a)))};
}

/// lambda_0 on the double-stochastic line beta = 1/3 + 2 alpha (lambda_1 = -lambda_0).
inline double lambda0_ds(double alpha) {
    check_alpha(alpha);
    return (alpha - kDecoherenceAlpha) / (2.0 * std::sqrt(alpha * (2.0 / 3.0 - 2.0 * alpha)));
}

struct Thresholds {
    double alpha_minus;
    double alpha_plus;
};

/// Roots of |lambda0_ds| = 1: (3 -+ 2 sqrt 2) / 18.
inline Thresholds thresholds() noexcept {
    const double s = 2.0 * std::sqrt(2.0);
    return {(3.0 - s) / 18.0, (3.0 + s) / 18.0};
}

/// Maximal asymmetry on the trigonometric segment, reached at both thresholds.
inline double xi_max() noexcept { return std::sqrt(2.0) / 9.0; }

struct Perturbation {
    double pi0;      ///< 1/4 - alpha
    double pi1;      ///< 3/4 - beta
    double xi_asym;  ///< |pi0 - pi1|
};

inline Perturbation perturbation_measures(const Params& p) {
    check(p);
    const double pi0 = 0.25 - p.alpha;
    const double pi1 = 0.75 - p.beta;
    return {pi0, pi1, std::abs(pi0 - pi1)};
}

struct Grid {
    double start;
    double stop;
    double step;

    /// Number of points start + k*step not exceeding stop (with rounding slack).
    std::size_t count() const noexcept {
        return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    }
    double at(std::size_t k) const noexcept { return start + static_cast<double>(k) * step; }
};

inline void check(const Grid& g) {
    if (!std::isfinite(g.start) || !std::isfinite(g.stop) || !std::isfinite(g.step) ||
        !(g.step > 0.0) || !(g.start <= g.stop)) {
        throw ParamsOutOfRange("grid must satisfy start <= stop and step > 0");
    }
    check_alpha(g.start);
    check_alpha(g.at(g.count() - 1));
}

struct SweepRow {
    double alpha;
    double beta;
    double lambda0;
    double lambda1;
    Regime regime;
    PhaseKind phase_kind;
    double theta0;
    double pi0;
    double pi1;
    double xi_asym;
};

inline SweepRow sweep_row(const Params& p, double tol = kDefaultRegimeTolerance) {
    const Vec2 lambda = lambda_closed(p);
    const Phase ph = phase(lambda[0]);
    const Perturbation pm = perturbation_measures(p);
    return {p.alpha,     p.beta,   lambda[0], lambda[1], classify(lambda, tol),
            ph.kind,     ph.theta, pm.pi0,    pm.pi1,    pm.xi_asym};
}

/// Tabulates the family along alpha, either on the double-stochastic line
/// (ds = true) or at a fixed beta. Rows are in increasing alpha.
inline std::vector<SweepRow> sweep(const Grid& grid, bool ds, std::optional<double> fixed_beta,
                                   double tol = kDefaultRegimeTolerance) {
    check(grid);
    if (!ds) {
        if (!fixed_beta) throw ParamsOutOfRange("a fixed beta is required when ds is off");
        check_beta(*fixed_beta);
    }
    std::vector<SweepRow> rows;
    rows.reserve(grid.count());
    for (std::size_t k = 0; k < grid.count(); ++k) {
        const double alpha = grid.at(k);
        rows.push_back(sweep_row(ds ? ds_params(alpha) : Params{alpha, *fixed_beta}, tol));
    }
    return rows;
}

}  // namespace interference::reference
