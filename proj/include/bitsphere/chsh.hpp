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

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bitsphere/dyadic.hpp"
#include "bitsphere/multiqubit.hpp"

namespace bitsphere {

/// Four (X, Y) settings, each realised as a Bell state with parameter m_XY.
/// Order: (0,0), (0,1), (1,0), (1,1).
struct CHSHConfig {
    Resolution resolution;
    std::array<int64_t, 4> m;
    AngleConvention mode = AngleConvention::counting;
};

/// Relative detector angles giving the quantum optimum: E = +1/sqrt 2 for
/// three settings and -1/sqrt 2 for (1,1), with E = -cos theta.
inline std::array<double, 4> chsh_optimal_angles() {
    const double pi = std::numbers::pi;
    return {3 * pi / 4, 3 * pi / 4, 3 * pi / 4, pi / 4};
}

inline CHSHConfig chsh_config_for_angles(Resolution r, const std::array<double, 4> &theta, AngleConvention mode) {
    CHSHConfig cfg{r, {}, mode};
    for (size_t i = 0; i < 4; ++i) cfg.m[i] = bell_m_for_angle(r, theta[i], mode);
    return cfg;
}

struct CHSHReport {
    CHSHConfig config;
    std::array<DyadicRational, 4> expectation{};
    DyadicRational s{};
    double distance_to_tsirelson = 0.0;
    bool violates_bell = false;

    nlohmann::json to_json() const {
        nlohmann::json e = nlohmann::json::array();
        for (size_t i = 0; i < 4; ++i) {
            e.push_back({{"setting", std::array<int, 2>{static_cast<int>(i / 2), static_cast<int>(i % 2)}},
                         {"m", config.m[i]},
                         {"cos_theta", bell_cos_theta(config.resolution, config.m[i], config.mode).str()},
                         {"E", expectation[i].str()},
                         {"E_float", expectation[i].to_double()}});
        }
        return {{"N", config.resolution.size()},
                {"mode", to_string(config.mode)},
                {"settings", e},
                {"S", s.str()},
                {"S_float", s.to_double()},
                {"distance_to_tsirelson", distance_to_tsirelson},
                {"violates_bell", violates_bell}};
    }
};

/// E(XY) = sum over lambda of A(lambda) B(lambda) / N, reading both outcomes
/// at position lambda of the Bell-state strings.
inline DyadicRational expectation_over_lambda(const ProductState2 &s) {
    const auto n = s.resolution().size();
    int64_t sum = 0;
    for (size_t lambda = 0; lambda < n; ++lambda) {
        const int a = s.ta().negated(lambda) ? -1 : 1;
        const int b = s.tb().negated(lambda) ? -1 : 1;
        sum += a * b;
    }
    return DyadicRational(sum, s.resolution().exponent());
}

inline CHSHReport chsh_run(const CHSHConfig &cfg) {
    CHSHReport rep{cfg};
    for (size_t i = 0; i < 4; ++i) rep.expectation[i] = expectation_over_lambda(bell_state(cfg.resolution, cfg.m[i]));
    rep.s = rep.expectation[0] + rep.expectation[1] + rep.expectation[2] - rep.expectation[3];
    rep.distance_to_tsirelson = std::fabs(rep.s.to_double() - 2.0 * std::numbers::sqrt2);
    rep.violates_bell = rep.s.abs() > DyadicRational(2);
    return rep;
}

}  // namespace bitsphere
