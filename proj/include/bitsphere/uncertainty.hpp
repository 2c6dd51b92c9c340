// Copyright 2026 The bitsphere Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "bitsphere/bloch_map.hpp"
#include "bitsphere/report.hpp"
#include "bitsphere/sampling.hpp"

namespace bitsphere {

/// Colatitudes of one sphere point from the z, x and y poles, and the slack
/// sin^2 theta' sin^2 theta'' - cos^2 theta of the squared uncertainty bound.
struct UncertaintySample {
    double theta = 0.0;
    double theta_prime = 0.0;
    double theta_dblprime = 0.0;
    double slack = 0.0;
};

inline UncertaintySample uncertainty_sample(const Vec3 &p) {
    const double x = p[0], y = p[1], z = p[2];
    UncertaintySample s;
    s.theta = std::acos(std::clamp(z, -1.0, 1.0));
    s.theta_prime = std::acos(std::clamp(x, -1.0, 1.0));
    s.theta_dblprime = std::acos(std::clamp(y, -1.0, 1.0));
    s.slack = (1.0 - x * x) * (1.0 - y * y) - z * z;
    return s;
}

struct GeometricUncertaintyReport {
    uint64_t samples = 0;
    uint64_t seed = 0;
    double tolerance = 1e-12;
    uint64_t violations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    double elapsed_ms = 0.0;

    nlohmann::json to_json() const {
        return {{"check", "uncertainty_geometric"}, {"samples", samples},       {"seed", seed},
                {"tolerance", tolerance},           {"violations", violations}, {"min_slack", min_slack},
                {"elapsed_ms", elapsed_ms}};
    }
};

/// Checks sin^2 theta' sin^2 theta'' >= cos^2 theta - tolerance at uniformly
/// random sphere points. Deterministic for a fixed (samples, seed).
inline GeometricUncertaintyReport verify_uncertainty_geometric(uint64_t samples, uint64_t seed,
                                                               std::vector<UncertaintySample> *record = nullptr) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    Stopwatch clock;
    GeometricUncertaintyReport rep;
    rep.samples = samples;
    rep.seed = seed;
    for (uint64_t i = 0; i < samples; ++i) {
        UncertaintySample s = uncertainty_sample(sphere_point(seed, i));
        rep.min_slack = std::min(rep.min_slack, s.slack);
        if (s.slack < -rep.tolerance) ++rep.violations;
        if (record) record->push_back(s);
    }
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

struct NearestSkeleton {
    SkeletonPoint point;
    double angular_distance;
};

/// Nearest point of skeleton F_frame to p. Ties go to the smaller m, then
/// the smaller n.
inline NearestSkeleton nearest_skeleton_point(Resolution r, Frame frame, const Vec3 &p) {
    const FrameBasis b = frame_basis(frame);
    const double c = std::clamp(dot(p, b.pole), -1.0, 1.0);
    const double ex = dot(p, b.zero_azimuth);
    const double ey = dot(p, b.quarter_azimuth);
    const double rho = std::hypot(ex, ey);
    const auto size = static_cast<int64_t>(r.size());
    const double step = 2.0 * std::numbers::pi / static_cast<double>(size);

    // Closest-longitude n is independent of m since every ring shares the grid.
    int64_t best_n = 1;
    double best_dphi = 0.0;
    if (rho > 0.0) {
        double phi = std::atan2(ey, ex);
        if (phi < 0) phi += 2.0 * std::numbers::pi;
        const auto k = static_cast<int64_t>(std::floor(phi / step));
        double best_gap = std::numeric_limits<double>::infinity();
        for (int64_t cand : {k - 1, k, k + 1, k + 2}) {
            int64_t n = ((cand - 1) % size + size) % size + 1;  // wrap into [1, N]
            double d = std::fabs(phi - static_cast<double>(n) * step);
            d = std::fmin(d, 2.0 * std::numbers::pi - d);
            if (d < best_gap || (d == best_gap && n < best_n)) {
                best_gap = d;
                best_n = n;
            }
        }
        best_dphi = best_gap;
    }

    int64_t best_m = 1;
    double best_cos = -2.0;
    const double s = std::sqrt(std::fmax(0.0, 1.0 - c * c));
    for (int64_t m = 1; m <= static_cast<int64_t>(r.half()); ++m) {
        const double cm = x2_value(r, m).to_double();
        const double f = c * cm + s * std::sqrt(1.0 - cm * cm) * std::cos(best_dphi);
        if (f > best_cos) {
            best_cos = f;
            best_m = m;
        }
    }
    return {SkeletonPoint(frame, r, best_m, best_n), std::acos(std::clamp(best_cos, -1.0, 1.0))};
}

/// The three nearest skeleton points around p and the exact ensemble
/// quantity Var(S_x) Var(S_y) - mean(S_z)^2 evaluated on them.
struct NeighbourhoodResult {
    std::array<NearestSkeleton, 3> nearest;  // F_x, F_y, F_z
    bool complete = false;                   // all three within epsilon
    DyadicRational variance_x{};
    DyadicRational variance_y{};
    DyadicRational mean_z_squared{};
    DyadicRational excess{};  // variance_x * variance_y - mean_z_squared
    bool satisfied = false;
};

inline NeighbourhoodResult evaluate_neighbourhood(Resolution r, const Vec3 &p, double epsilon) {
    NeighbourhoodResult out{.nearest = {nearest_skeleton_point(r, Frame::x, p), nearest_skeleton_point(r, Frame::y, p),
                                        nearest_skeleton_point(r, Frame::z, p)}};
    out.complete = std::all_of(out.nearest.begin(), out.nearest.end(),
                               [&](const NearestSkeleton &n) { return n.angular_distance <= epsilon; });
    const DyadicRational cx = out.nearest[0].point.cos_theta();
    const DyadicRational cy = out.nearest[1].point.cos_theta();
    const DyadicRational cz = out.nearest[2].point.cos_theta();
    out.variance_x = DyadicRational(1) - cx * cx;
    out.variance_y = DyadicRational(1) - cy * cy;
    out.mean_z_squared = cz * cz;
    out.excess = out.variance_x * out.variance_y - out.mean_z_squared;
    out.satisfied = out.excess.to_double() >= -4.0 * epsilon;
    return out;
}

struct SkeletonUncertaintyReport {
    uint64_t n = 0;
    double epsilon = 0.0;
    double slack_tolerance = 0.0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    uint64_t evaluated = 0;
    uint64_t missing_neighbourhoods = 0;
    uint64_t violations = 0;
    double min_excess = std::numeric_limits<double>::infinity();
    double elapsed_ms = 0.0;

    nlohmann::json to_json() const {
        return {{"check", "uncertainty_skeleton"},
                {"N", n},
                {"epsilon", epsilon},
                {"slack_tolerance", slack_tolerance},
                {"samples", samples},
                {"seed", seed},
                {"evaluated", evaluated},
                {"missing_neighbourhoods", missing_neighbourhoods},
                {"violations", violations},
                {"min_excess", min_excess},
                {"elapsed_ms", elapsed_ms}};
    }
};

/// Samples sphere points, pairs each with its nearest F_x, F_y and F_z points
/// and checks Var(S_x) Var(S_y) >= mean(S_z)^2 - 4 epsilon on their exact
/// statistics. Neighbourhoods lacking a skeleton point within epsilon are
/// counted, not evaluated.
inline SkeletonUncertaintyReport verify_uncertainty_skeleton(Resolution r, double epsilon, uint64_t samples,
                                                             uint64_t seed) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    Stopwatch clock;
    SkeletonUncertaintyReport rep;
    rep.n = r.size();
    rep.epsilon = epsilon;
    rep.slack_tolerance = 4.0 * epsilon;
    rep.samples = samples;
    rep.seed = seed;
    for (uint64_t i = 0; i < samples; ++i) {
        NeighbourhoodResult nb = evaluate_neighbourhood(r, sphere_point(seed, i), epsilon);
        if (!nb.complete) {
            ++rep.missing_neighbourhoods;
            continue;
        }
        ++rep.evaluated;
        rep.min_excess = std::min(rep.min_excess, nb.excess.to_double());
        if (!nb.satisfied) ++rep.violations;
    }
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

}  // namespace bitsphere
