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

// Joint, conditional and marginal probabilities of two dichotomic observables.

#pragma once

#include <array>
#include <cmath>

#include "interference/errors.hpp"
#include "interference/interval_set.hpp"

namespace interference {

/// Distribution over the outcomes {0, 1}.
using Vec2 = std::array<double, 2>;

/// 2x2 table indexed [i][j] with i the value of b and j the value of a.
using Mat2 = std::array<Vec2, 2>;

inline constexpr double kUnitSumTolerance = 1e-12;

/// Observable with values in {0,1}; `ones` is the event {value = 1}.
class DichotomicObservable {
public:
    DichotomicObservable() = default;
    explicit DichotomicObservable(IntervalSet ones)
        : ones_(std::move(ones)), zeros_(complement(ones_)) {}

    const IntervalSet& ones() const noexcept { return ones_; }
    const IntervalSet& zeros() const noexcept { return zeros_; }
    const IntervalSet& event(int value) const noexcept { return value == 1 ? ones_ : zeros_; }
    int operator()(double omega) const noexcept { return ones_.contains(omega) ? 1 : 0; }

    Vec2 distribution() const noexcept { return {measure(zeros_), measure(ones_)}; }

    friend bool operator==(const DichotomicObservable& x, const DichotomicObservable& y) {
        return x.ones_ == y.ones_;
    }

private:
    IntervalSet ones_;
    IntervalSet zeros_ = IntervalSet::full();
};

inline Vec2 row_sums(const Mat2& m) noexcept { return {m[0][0] + m[0][1], m[1][0] + m[1][1]}; }
inline Vec2 column_sums(const Mat2& m) noexcept {
    return {m[0][0] + m[1][0], m[0][1] + m[1][1]};
}

/// Bayes: p_{ij}^{a/b} = p_{ij}^{ab} / p_i^b.
inline Mat2 conditional(const Mat2& joint, const Vec2& marginal_b) {
    Mat2 out{};
    for (int i = 0; i < 2; ++i) {
        if (!(marginal_b[i] > 0.0)) throw ZeroConditioningEvent(i);
        for (int j = 0; j < 2; ++j) out[i][j] = joint[i][j] / marginal_b[i];
    }
    return out;
}

/// Formula of total probability: p_j^a = p_0^b p_{0j}^{a/b} + p_1^b p_{1j}^{a/b}.
inline Vec2 total_probability(const Vec2& marginal_b, const Mat2& cond) noexcept {
    Vec2 out{};
    for (int j = 0; j < 2; ++j) out[j] = marginal_b[0] * cond[0][j] + marginal_b[1] * cond[1][j];
    return out;
}

}  // namespace interference
