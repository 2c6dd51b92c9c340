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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bitsphere/admissibility.hpp"
#include "bitsphere/angle_sets.hpp"
#include "bitsphere/chsh.hpp"
#include "bitsphere/errors.hpp"

namespace bitsphere {

struct CounterfactualCase {
    int64_t lambda;
    Rational gamma_turns;
    AdmissibilityVerdict verdict;
};

struct FactorisationReport {
    uint64_t n = 0;
    AngleConvention mode = AngleConvention::counting;
    std::array<int64_t, 4> m{};
    uint64_t triples_checked = 0;
    uint64_t factorisation_failures = 0;
    bool statistical_independence = false;
    std::vector<CounterfactualCase> counterfactuals;
    uint64_t inadmissible_counterfactuals = 0;
    std::string note;

    bool falsified() const {
        return factorisation_failures != 0 || !statistical_independence || inadmissible_counterfactuals == 0;
    }

    nlohmann::json to_json() const {
        nlohmann::json cf = nlohmann::json::array();
        for (const auto &c : counterfactuals) {
            auto j = c.verdict.to_json();
            j["lambda"] = c.lambda;
            j["gamma_turns"] = c.gamma_turns.str();
            cf.push_back(j);
        }
        return {{"N", n},
                {"mode", to_string(mode)},
                {"m", m},
                {"triples_checked", triples_checked},
                {"factorisation_failures", factorisation_failures},
                {"statistical_independence", statistical_independence},
                {"inadmissible_counterfactuals", inadmissible_counterfactuals},
                {"counterfactuals", cf},
                {"note", note}};
    }
};

/// On-I_U triples fall in two classes, {(0,0), (1,1)} and {(0,1), (1,0)}.
/// Within a class X fixes Y and vice versa, so the single-argument outcome
/// functions A_X and B_Y are well defined; the check compares their product
/// with the joint outcome for every lambda. The plain-Factorisation
/// counter-demonstration swaps Alice's setting on a fixed lambda and asks
/// whether the triangle (X=0, X=1, Y=0) is still legal, with the angle at
/// X=0 taken as lambda/N of a turn.
inline FactorisationReport independence_factorisation_check(Resolution r,
                                                            AngleConvention mode = AngleConvention::counting) {
    const CHSHConfig cfg = chsh_config_for_angles(r, chsh_optimal_angles(), mode);
    std::vector<ProductState2> states;
    for (int64_t m : cfg.m) states.push_back(bell_state(r, m));

    FactorisationReport rep;
    rep.n = r.size();
    rep.mode = mode;
    rep.m = cfg.m;

    auto joint_a = [&](int x, int y, size_t lambda) { return states[2 * x + y].ta().negated(lambda) ? -1 : 1; };
    auto joint_b = [&](int y, int x, size_t lambda) { return states[2 * x + y].tb().negated(lambda) ? -1 : 1; };

    const std::array<std::array<std::pair<int, int>, 2>, 2> classes{{{{{0, 0}, {1, 1}}}, {{{0, 1}, {1, 0}}}}};
    for (const auto &cls : classes) {
        std::array<int, 2> y_of_x{}, x_of_y{};
        for (auto [x, y] : cls) {
            y_of_x[x] = y;
            x_of_y[y] = x;
        }
        auto single_a = [&](int x, size_t lambda) { return joint_a(x, y_of_x[x], lambda); };
        auto single_b = [&](int y, size_t lambda) { return joint_b(y, x_of_y[y], lambda); };
        for (auto [x, y] : cls) {
            for (size_t lambda = 0; lambda < r.size(); ++lambda) {
                ++rep.triples_checked;
                if (joint_a(x, y, lambda) * joint_b(y, x, lambda) != single_a(x, lambda) * single_b(y, lambda)) {
                    ++rep.factorisation_failures;
                }
            }
        }
    }

    // p(lambda|XY) = 1/N for every admissible setting
    rep.statistical_independence = true;
    const DyadicRational weight(1, r.exponent());
    for (size_t s = 0; s < 4; ++s) {
        DyadicRational mass(0);
        for (size_t lambda = 0; lambda < r.size(); ++lambda) mass += weight;
        if (!(mass == DyadicRational(1))) rep.statistical_independence = false;
    }

    const DyadicRational cos_00 = bell_cos_theta(r, cfg.m[0], mode);
    if (cos_00.abs() == DyadicRational(1)) {
        rep.note = "cos theta_00 = " + cos_00.str() + " puts the triangle vertex at a pole; no counterfactual test";
        return rep;
    }
    const Rational cos_alice = x2_value(r, static_cast<int64_t>(r.quarter())).to_rational();
    for (int64_t lambda = 1; lambda <= static_cast<int64_t>(r.size()); ++lambda) {
        const Rational gamma(lambda, static_cast<int64_t>(r.size()));
        AdmissibilityVerdict v = sg_counterfactual_order_check(cos_00.to_rational(), cos_alice, gamma, r);
        if (!v.admissible) ++rep.inadmissible_counterfactuals;
        rep.counterfactuals.push_back({lambda, gamma, std::move(v)});
    }
    return rep;
}

}  // namespace bitsphere
