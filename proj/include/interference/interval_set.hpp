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

// Finite unions of half-open subintervals of [0,1) under Lebesgue measure.

#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "interference/errors.hpp"

namespace interference {

/// Half-open interval [lo, hi).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const noexcept { return hi - lo; }
    bool empty() const noexcept { return !(lo < hi); }
    bool contains(double x) const noexcept { return lo <= x && x < hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical finite union of disjoint half-open intervals inside [0,1].
///
/// Canonical form: intervals sorted by lo, each non-empty, and separated by
/// a strictly positive gap (adjacent or overlapping inputs are merged).
/// Equality of two sets is therefore plain endpoint equality.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Canonicalizes arbitrary (possibly overlapping, unsorted) input.
    /// Throws InvalidInterval when an endpoint is non-finite, outside [0,1],
    /// or when lo > hi. Empty pairs (lo == hi) are dropped.
    explicit IntervalSet(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {
        for (const auto& p : pieces_) {
            if (!std::isfinite(p.lo) || !std::isfinite(p.hi) || p.lo < 0.0 || p.hi > 1.0 ||
                p.lo > p.hi) {
                throw InvalidInterval("interval [" + std::to_string(p.lo) + ", " +
                                      std::to_string(p.hi) + ") is not inside [0,1]");
            }
        }
        canonicalize();
    }

    IntervalSet(std::initializer_list<Interval> pieces)
        : IntervalSet(std::vector<Interval>(pieces)) {}

    static IntervalSet full() { return IntervalSet({Interval{0.0, 1.0}}); }

    std::span<const Interval> intervals() const noexcept { return pieces_; }
    std::size_t size() const noexcept { return pieces_.size(); }
    bool empty() const noexcept { return pieces_.empty(); }

    bool contains(double x) const noexcept {
        // first interval with lo > x, then step back
        auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                                   [](double v, const Interval& p) { return v < p.lo; });
        if (it == pieces_.begin()) return false;
        return std::prev(it)->contains(x);
    }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    void canonicalize() {
        std::erase_if(pieces_, [](const Interval& p) { return p.empty(); });
        std::sort(pieces_.begin(), pieces_.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        std::vector<Interval> merged;
        merged.reserve(pieces_.size());
        for (const auto& p : pieces_) {
            if (!merged.empty() && p.lo <= merged.back().hi) {
                merged.back().hi = std::max(merged.back().hi, p.hi);
            } else {
                merged.push_back(p);
            }
        }
        pieces_ = std::move(merged);
    }

    std::vector<Interval> pieces_;
};

/// Lebesgue measure, computed from endpoints.
inline double measure(const IntervalSet& s) noexcept {
    return std::accumulate(s.intervals().begin(), s.intervals().end(), 0.0,
                           [](double acc, const Interval& p) { return acc + p.length(); });
}

inline IntervalSet intersect(const IntervalSet& s, const IntervalSet& t) {
    std::vector<Interval> out;
    auto a = s.intervals();
    auto b = t.intervals();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double lo = std::max(a[i].lo, b[j].lo);
        const double hi = std::min(a[i].hi, b[j].hi);
        if (lo < hi) out.push_back({lo, hi});
        if (a[i].hi < b[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return IntervalSet(std::move(out));
}

/// Complement in [0,1).
inline IntervalSet complement(const IntervalSet& s) {
    std::vector<Interval> out;
    double cursor = 0.0;
    for (const auto& p : s.intervals()) {
        if (cursor < p.lo) out.push_back({cursor, p.lo});
        cursor = p.hi;
    }
    if (cursor < 1.0) out.push_back({cursor, 1.0});
    return IntervalSet(std::move(out));
}

inline IntervalSet unite(const IntervalSet& s, const IntervalSet& t) {
    std::vector<Interval> all(s.intervals().begin(), s.intervals().end());
    all.insert(all.end(), t.intervals().begin(), t.intervals().end());
    return IntervalSet(std::move(all));
}

inline IntervalSet intersect(const IntervalSet& s, const Interval& t) {
    return intersect(s, IntervalSet({t}));
}

}  // namespace interference
