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

// Statistical deviations of the formula of total probability under filtering,
// their classification into interference regimes, and phase parameterization.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string_view>

#include "interference/errors.hpp"
#include "interference/probability.hpp"

namespace interference {

inline constexpr double kDefaultRegimeTolerance = 1e-9;
inline constexpr double kDoubleStochasticTolerance = 1e-9;

enum class Regime { Conventional, Trigonometric, Hyperbolic, HyperTrigonometric, Boundary };

inline std::string_view to_string(Regime r) noexcept {
    switch (r) {
        case Regime::Conventional: return "Conventional";
        case Regime::Trigonometric: return "Trigonometric";
        case Regime::Hyperbolic: return "Hyperbolic";
        case Regime::HyperTrigonometric: return "HyperTrigonometric";
        case Regime::Boundary: return "Boundary";
    }
    return "Unknown";
}

enum class PhaseKind { Circular, Hyperbolic };

inline std::string_view to_string(PhaseKind k) noexcept {
    return k == PhaseKind::Circular ? "circular" : "hyperbolic";
}

/// lambda = sign * cos(theta) (circular, theta in [0, pi], sign = +1) or
/// lambda = sign * cosh(theta) (hyperbolic, theta >= 0).
struct Phase {
    PhaseKind kind = PhaseKind::Circular;
    double theta = 0.0;
    int sign = 1;

    double lambda() const noexcept {
        return kind == PhaseKind::Circular ? sign * std::cos(theta) : sign * std::cosh(theta);
    }
};

namespace detail {

/// 2 sqrt(p0 p1 q0j q1j); the scale of the interference term for outcome j.
inline double interference_scale(const Vec2& p_b, const Mat2& q_cond, int j) noexcept {
    return 2.0 * std::sqrt(p_b[0] * p_b[1] * q_cond[0][j] * q_cond[1][j]);
}

}  // namespace detail

/// delta_j = p_0^b (p_{0j} - q_{0j}) + p_1^b (p_{1j} - q_{1j}) over conditionals.
inline Vec2 statistical_deviation(const Vec2& p_b, const Mat2& p_cond, const Mat2& q_cond) noexcept {
    Vec2 out{};
    for (int j = 0; j < 2; ++j)
        out[j] = p_b[0] * (p_cond[0][j] - q_cond[0][j]) + p_b[1] * (p_cond[1][j] - q_cond[1][j]);
    return out;
}

/// lambda_j = delta_j / (2 sqrt(p_0^b p_1^b q_{0j}^{a/b} q_{1j}^{a/b})).
/// Throws DegenerateDenominator(j) when the square root vanishes.
inline Vec2 normalized_deviation(const Vec2& p_b, const Mat2& p_cond, const Mat2& q_cond) {
    const Vec2 delta = statistical_deviation(p_b, p_cond, q_cond);
    Vec2 out{};
    for (int j = 0; j < 2; ++j) {
        const double d = detail::interference_scale(p_b, q_cond, j);
        if (!(d > 0.0)) throw DegenerateDenominator(j);
        out[j] = delta[j] / d;
    }
    return out;
}

/// Component j of the joint-probability form of lambda; nullopt when the
/// denominator 2 sqrt(q_{0j}^{ab} q_{1j}^{ab}) vanishes.
inline std::optional<double> normalized_deviation_joint_at(const Mat2& p_joint, const Mat2& q_joint,
                                                          int j) noexcept {
    const double d = 2.0 * std::sqrt(q_joint[0][j] * q_joint[1][j]);
    if (!(d > 0.0)) return std::nullopt;
    return ((p_joint[0][j] - q_joint[0][j]) + (p_joint[1][j] - q_joint[1][j])) / d;
}

/// Same coefficient written over joint probabilities only:
/// lambda_j = [(p_{0j} - q_{0j}) + (p_{1j} - q_{1j})] / (2 sqrt(q_{0j} q_{1j})).
inline Vec2 normalized_deviation_joint(const Mat2& p_joint, const Mat2& q_joint) {
    Vec2 out{};
    for (int j = 0; j < 2; ++j) {
        const auto v = normalized_deviation_joint_at(p_joint, q_joint, j);
        if (!v) throw DegenerateDenominator(j);
        out[j] = *v;
    }
    return out;
}

inline bool check_stochastic(const Mat2& q_cond, double tol = kUnitSumTolerance) noexcept {
    const Vec2 rows = row_sums(q_cond);
    return std::abs(rows[0] - 1.0) <= tol && std::abs(rows[1] - 1.0) <= tol;
}

/// Rows and columns all sum to one.
inline bool check_double_stochastic(const Mat2& q_cond, double tol = kUnitSumTolerance) noexcept {
    const Vec2 cols = column_sums(q_cond);
    return check_stochastic(q_cond, tol) && std::abs(cols[0] - 1.0) <= tol &&
           std::abs(cols[1] - 1.0) <= tol;
}

/// Values within tol of |lambda| = 1 are reported as Boundary.
inline Regime classify(const Vec2& lambda, double tol = kDefaultRegimeTolerance) {
    if (!std::isfinite(lambda[0]) || !std::isfinite(lambda[1])) throw NonFiniteLambda();
    const double m0 = std::abs(lambda[0]);
    const double m1 = std::abs(lambda[1]);
    auto boundary = [tol](double m) { return m >= 1.0 - tol && m <= 1.0 + tol; };
    if (boundary(m0) || boundary(m1)) return Regime::Boundary;
    if (m0 <= tol && m1 <= tol) return Regime::Conventional;
    const bool small0 = m0 < 1.0 - tol;
    const bool small1 = m1 < 1.0 - tol;
    if (small0 && small1) return Regime::Trigonometric;
    if (!small0 && !small1) return Regime::Hyperbolic;
    return Regime::HyperTrigonometric;
}

inline Phase phase(double lambda) {
    if (!std::isfinite(lambda)) throw NonFiniteLambda();
    if (std::abs(lambda) <= 1.0) return {PhaseKind::Circular, std::acos(lambda), 1};
    return {PhaseKind::Hyperbolic, std::acosh(std::abs(lambda)), lambda < 0.0 ? -1 : 1};
}

/// General transformation: p_j^a = p_0^b q_{0j} + p_1^b q_{1j} + 2 sqrt(p_0^b p_1^b q_{0j} q_{1j}) lambda_j.
inline Vec2 reconstruct_total(const Vec2& p_b, const Mat2& q_cond, const Vec2& lambda) noexcept {
    Vec2 out = total_probability(p_b, q_cond);
    for (int j = 0; j < 2; ++j) out[j] += detail::interference_scale(p_b, q_cond, j) * lambda[j];
    return out;
}

/// Quantum prediction from a two-level state.
///
/// The b-eigenbasis is expanded over the a-eigenbasis with moduli
/// sqrt(q_{ij}^{a/b}); a relative sign on the (0,1) coefficient keeps the two
/// vectors orthogonal (requires q double stochastic). The state
/// sqrt(p_0^b) phi_0 + e^{i theta} sqrt(p_1^b) phi_1 is then projected onto the
/// a-eigenbasis and squared, which yields lambda_0 = cos(theta) = -lambda_1.
inline Vec2 born_check(const Vec2& p_b, const Mat2& q_cond, double theta) {
    if (!check_double_stochastic(q_cond, kDoubleStochasticTolerance)) throw NotDoubleStochastic();
    using C = std::complex<double>;
    constexpr std::array<std::array<double, 2>, 2> basis_phase{{{0.0, std::numbers::pi}, {0.0, 0.0}}};
    std::array<std::array<C, 2>, 2> phi{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) phi[i][j] = std::polar(std::sqrt(q_cond[i][j]), basis_phase[i][j]);
    const C c0 = std::sqrt(p_b[0]);
    const C c1 = std::polar(std::sqrt(p_b[1]), theta);
    Vec2 out{};
    for (int j = 0; j < 2; ++j) out[j] = std::norm(c0 * phi[0][j] + c1 * phi[1][j]);
    return out;
}

/// Per-branch split of lambda: xi_{ij} = (p_{ij}^{ab} - q_{ij}^{ab}) / (2 sqrt(p_0^b p_1^b q_{0j}^{a/b} q_{1j}^{a/b})).
/// Column j sums to lambda_j.
inline Mat2 xi_coefficients(const Mat2& p_joint, const Mat2& q_joint, const Vec2& p_b,
                            const Mat2& q_cond) {
    Mat2 out{};
    for (int j = 0; j < 2; ++j) {
        const double d = detail::interference_scale(p_b, q_cond, j);
        if (!(d > 0.0)) throw DegenerateDenominator(j);
        for (int i = 0; i < 2; ++i) out[i][j] = (p_joint[i][j] - q_joint[i][j]) / d;
    }
    return out;
}

struct DeviationReport {
    Vec2 delta{};
    Vec2 lambda{};
    Regime regime = Regime::Conventional;
    std::array<Phase, 2> phases{};
};

inline DeviationReport deviation_report(const Vec2& p_b, const Mat2& p_cond, const Mat2& q_cond,
                                        double tol = kDefaultRegimeTolerance) {
    DeviationReport r;
    r.delta = statistical_deviation(p_b, p_cond, q_cond);
    r.lambda = normalized_deviation(p_b, p_cond, q_cond);
    r.regime = classify(r.lambda, tol);
    r.phases = {phase(r.lambda[0]), phase(r.lambda[1])};
    return r;
}

}  // namespace interference
