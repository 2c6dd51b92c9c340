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
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "bitsphere/angle_sets.hpp"
#include "bitsphere/bloch_map.hpp"
#include "bitsphere/dyadic.hpp"
#include "bitsphere/sampling.hpp"

namespace bitsphere {

/// One device in a chain, oriented relative to the previous one by a legal
/// skeleton offset (relative_m, relative_n).
struct SGDevice {
    Resolution resolution;
    int64_t relative_m;
    int64_t relative_n;

    SkeletonPoint point() const {
        return SkeletonPoint(Frame::z, resolution, relative_m, relative_n);
    }
};

enum class Branch { up, down };

struct SGStage {
    DyadicRational stage_fraction;
    DyadicRational cumulative;
};

/// Each device re-prepares the state, so the surviving fraction after k
/// stages is the product of the per-stage branch fractions.
inline std::vector<SGStage> sg_chain(std::span<const SGDevice> devices, std::span<const Branch> branches) {
    if (devices.empty()) throw std::invalid_argument("a Stern-Gerlach chain needs at least one device");
    if (branches.size() != devices.size()) throw std::invalid_argument("one branch choice per device required");
    std::vector<SGStage> out;
    DyadicRational cumulative(1);
    for (size_t i = 0; i < devices.size(); ++i) {
        const DyadicRational up = devices[i].point().up_fraction();
        const DyadicRational f = branches[i] == Branch::up ? up : DyadicRational(1) - up;
        cumulative = cumulative * f;
        out.push_back({f, cumulative});
    }
    return out;
}

/// X2 index whose cosine is nearest c; ties go to the smaller m.
inline int64_t nearest_x2_index(Resolution r, double c) {
    const auto half = static_cast<int64_t>(r.half());
    const double ideal = (static_cast<double>(half) + 1.0 - c * static_cast<double>(half)) / 2.0;
    const auto base = static_cast<int64_t>(std::floor(ideal));
    int64_t best = 1;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int64_t cand = base - 1; cand <= base + 2; ++cand) {
        const int64_t m = std::clamp<int64_t>(cand, 1, half);
        const double gap = std::fabs(x2_value(r, m).to_double() - c);
        if (gap < best_gap || (gap == best_gap && m < best)) {
            best_gap = gap;
            best = m;
        }
    }
    return best;
}

struct SGMonteCarloReport {
    uint64_t n = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    uint64_t up = 0;
    double up_fraction = 0.0;
    double three_sigma = 0.0;

    nlohmann::json to_json() const {
        return {{"N", n},          {"trials", trials},           {"seed", seed},
                {"up", up},        {"up_fraction", up_fraction}, {"three_sigma", three_sigma}};
    }
};

/// Single device along z. Each particle has a uniformly random reference
/// direction P; cos(theta_PA) is snapped to the nearest legal X2 value and
/// the outcome is the symbol of T(2m - 1, 0) at a random position lambda.
inline SGMonteCarloReport sg_single_device(Resolution r, uint64_t trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    SGMonteCarloReport rep;
    rep.n = r.size();
    rep.trials = trials;
    rep.seed = seed;
    const auto size = static_cast<double>(r.size());
    for (uint64_t t = 0; t < trials; ++t) {
        const Vec3 p = sphere_point(seed, t);
        const int64_t m = nearest_x2_index(r, p[2]);
        const auto lambda = static_cast<size_t>(unit_uniform(seed, t, 2) * size);
        if (!make_T(Axis::z(), r, 2 * m - 1, 0).symbols().negated(lambda)) ++rep.up;
    }
    rep.up_fraction = static_cast<double>(rep.up) / static_cast<double>(trials);
    rep.three_sigma = 3.0 * std::sqrt(0.25 / static_cast<double>(trials));
    return rep;
}

}  // namespace bitsphere
