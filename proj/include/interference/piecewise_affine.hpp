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

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "interference/errors.hpp"
#include "interference/interval_set.hpp"

namespace interference {

/// Affine bijection of src onto dst with positive slope.
struct AffinePiece {
    Interval src;
    Interval dst;

    double slope() const noexcept { return dst.length() / src.length(); }

    double forward(double x) const noexcept {
        if (src == dst) return x;
        double y = dst.lo + (x - src.lo) * slope();
        // keep the image inside its half-open piece despite rounding
        if (y >= dst.hi) y = std::nextafter(dst.hi, dst.lo);
        if (y < dst.lo) y = dst.lo;
        return y;
    }

    /// Inverse image of a point of dst; endpoints of dst map to endpoints of src exactly.
    double inverse(double y) const noexcept {
        if (y == dst.lo) return src.lo;
        if (y == dst.hi) return src.hi;
        if (src == dst) return y;
        const double x = src.lo + (y - dst.lo) * (src.length() / dst.length());
        return std::clamp(x, src.lo, src.hi);
    }

    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Piecewise-affine map of an interval set onto itself.
///
/// Construction does not check the invariants; use validate() for diagnostics.
/// EnsembleModel refuses maps with violations. Pieces are kept sorted by
/// src.lo; dst intervals may appear in any order.
class PiecewiseAffineMap {
public:
    PiecewiseAffineMap() = default;

    PiecewiseAffineMap(std::vector<AffinePiece> pieces, IntervalSet domain)
        : pieces_(std::move(pieces)), domain_(std::move(domain)) {
        std::stable_sort(pieces_.begin(), pieces_.end(),
                         [](const AffinePiece& a, const AffinePiece& b) {
                             return a.src.lo < b.src.lo;
                         });
    }

    static PiecewiseAffineMap identity(const IntervalSet& domain) {
        std::vector<AffinePiece> pieces;
        for (const auto& iv : domain.intervals()) pieces.push_back({iv, iv});
        return PiecewiseAffineMap(std::move(pieces), domain);
    }

    const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }
    const IntervalSet& domain() const noexcept { return domain_; }

    friend bool operator==(const PiecewiseAffineMap&, const PiecewiseAffineMap&) = default;

private:
    std::vector<AffinePiece> pieces_;
    IntervalSet domain_;
};

/// Pointwise evaluation; throws PointOutsideDomain if no source piece holds x.
inline double apply(const PiecewiseAffineMap& map, double x) {
    const auto& pieces = map.pieces();
    auto it = std::upper_bound(pieces.begin(), pieces.end(), x,
                               [](double v, const AffinePiece& p) { return v < p.src.lo; });
    if (it == pieces.begin() || !std::prev(it)->src.contains(x)) throw PointOutsideDomain(x);
    return std::prev(it)->forward(x);
}

/// g^{-1}(target), restricted to the part of target lying in the range.
inline IntervalSet preimage(const PiecewiseAffineMap& map, const IntervalSet& target) {
    std::vector<Interval> out;
    for (const auto& piece : map.pieces()) {
        if (piece.src.empty() || piece.dst.empty()) continue;
        for (const auto& t : target.intervals()) {
            const double lo = std::max(t.lo, piece.dst.lo);
            const double hi = std::min(t.hi, piece.dst.hi);
            if (!(lo < hi)) continue;
            out.push_back({piece.inverse(lo), piece.inverse(hi)});
        }
    }
    return IntervalSet(std::move(out));
}

enum class ViolationKind {
    NonPositiveSlope,
    OutsideUnitInterval,
    SourceOutsideDomain,
    TargetOutsideDomain,
    OverlappingSources,
    OverlappingTargets,
    DomainNotCovered,
    RangeNotCovered,
};

inline std::string_view to_string(ViolationKind k) noexcept {
    switch (k) {
        case ViolationKind::NonPositiveSlope: return "NonPositiveSlope";
        case ViolationKind::OutsideUnitInterval: return "OutsideUnitInterval";
        case ViolationKind::SourceOutsideDomain: return "SourceOutsideDomain";
        case ViolationKind::TargetOutsideDomain: return "TargetOutsideDomain";
        case ViolationKind::OverlappingSources: return "OverlappingSources";
        case ViolationKind::OverlappingTargets: return "OverlappingTargets";
        case ViolationKind::DomainNotCovered: return "DomainNotCovered";
        case ViolationKind::RangeNotCovered: return "RangeNotCovered";
    }
    return "Unknown";
}

struct Violation {
    ViolationKind kind;
    int piece = -1;  ///< index into pieces(), or -1 when the rule concerns the whole map
    std::string message;
};

namespace detail {

inline bool unit_interval(const Interval& iv) noexcept {
    return std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo >= 0.0 && iv.hi <= 1.0;
}

inline void check_disjoint(std::vector<std::pair<Interval, int>> ivs, ViolationKind kind,
                           std::vector<Violation>& out) {
    std::sort(ivs.begin(), ivs.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    for (std::size_t k = 1; k < ivs.size(); ++k) {
        if (ivs[k].first.lo < ivs[k - 1].first.hi) {
            out.push_back({kind, ivs[k].second,
                           "piece " + std::to_string(ivs[k].second) + " overlaps piece " +
                               std::to_string(ivs[k - 1].second)});
        }
    }
}

}  // namespace detail

/// Lists every broken invariant; empty iff the map is a valid filter on its domain.
inline std::vector<Violation> validate(const PiecewiseAffineMap& map) {
    std::vector<Violation> out;
    std::vector<std::pair<Interval, int>> srcs, dsts;
    const auto& domain = map.domain();

    for (std::size_t k = 0; k < map.pieces().size(); ++k) {
        const auto& p = map.pieces()[k];
        const int idx = static_cast<int>(k);
        if (!detail::unit_interval(p.src) || !detail::unit_interval(p.dst)) {
            out.push_back({ViolationKind::OutsideUnitInterval, idx,
                           "piece " + std::to_string(k) + " has endpoints outside [0,1]"});
            continue;
        }
        if (p.src.empty() || p.dst.empty()) {
            out.push_back({ViolationKind::NonPositiveSlope, idx,
                           "piece " + std::to_string(k) + " has an empty source or target"});
            continue;
        }
        if (intersect(domain, p.src) != IntervalSet({p.src})) {
            out.push_back({ViolationKind::SourceOutsideDomain, idx,
                           "source of piece " + std::to_string(k) + " leaves the domain"});
        }
        if (intersect(domain, p.dst) != IntervalSet({p.dst})) {
            out.push_back({ViolationKind::TargetOutsideDomain, idx,
                           "target of piece " + std::to_string(k) + " leaves the domain"});
        }
        srcs.emplace_back(p.src, idx);
        dsts.emplace_back(p.dst, idx);
    }

    detail::check_disjoint(srcs, ViolationKind::OverlappingSources, out);
    detail::check_disjoint(dsts, ViolationKind::OverlappingTargets, out);

    auto cover = [](const std::vector<std::pair<Interval, int>>& ivs) {
        std::vector<Interval> all;
        for (const auto& [iv, idx] : ivs) all.push_back(iv);
        return IntervalSet(std::move(all));
    };
    if (cover(srcs) != domain) {
        out.push_back({ViolationKind::DomainNotCovered, -1,
                       "source pieces do not partition the domain"});
    }
    if (cover(dsts) != domain) {
        out.push_back({ViolationKind::RangeNotCovered, -1,
                       "target pieces do not partition the domain"});
    }
    return out;
}

}  // namespace interference
