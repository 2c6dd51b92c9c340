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

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "bitsphere/admissibility.hpp"
#include "bitsphere/niven.hpp"
#include "bitsphere/rational.hpp"

namespace bitsphere {

/// Photon measured in the linear v'/h' basis; cos 2 phi is rational.
struct LinearChoice {
    Rational cos_2phi;
};

/// Photon measured in the circular L/R basis; phi/2pi is rational.
struct CircularChoice {
    Rational phi_turns;
};

using GhzChoice = std::variant<LinearChoice, CircularChoice>;

struct GhzPhotonResult {
    std::string measured;
    std::string counterfactual;
    AdmissibilityVerdict verdict;
    /// Both bases legal at once: only at the Niven exceptions.
    bool coexistence = false;

    nlohmann::json to_json() const {
        auto j = verdict.to_json();
        j["measured"] = measured;
        j["counterfactual"] = counterfactual;
        j["coexistence"] = coexistence;
        return j;
    }
};

/// Could the photon have been measured in the other basis on the same lambda?
inline GhzPhotonResult ghz_counterfactual(const GhzChoice &choice) {
    if (const auto *lin = std::get_if<LinearChoice>(&choice)) {
        const Rational &c = lin->cos_2phi;
        if (c.abs() > Rational(1)) throw std::domain_error("cos 2phi must lie in [-1, 1], got " + c.str());
        GhzPhotonResult out{"linear", "circular", {}, false};
        if (niven_exception(c)) {
            out.coexistence = true;
            out.verdict = {true, VerdictReason::rational_cos_ok,
                           "cos 2phi = " + c.str() + " is a Niven exception; phi/2pi is rational as well"};
        } else {
            out.verdict = {false, VerdictReason::niven_conflict,
                           "cos 2phi = " + c.str() + " is rational, so phi/2pi is irrational"};
        }
        return out;
    }
    const Rational &turns = std::get<CircularChoice>(choice).phi_turns;
    GhzPhotonResult out{"circular", "linear", {}, false};
    if (auto c = rational_cos_of_turns(turns * Rational(2))) {
        out.coexistence = true;
        out.verdict = {true, VerdictReason::rational_cos_ok,
                       "phi/2pi = " + turns.str() + " gives cos 2phi = " + c->str() + ", a Niven exception"};
    } else {
        out.verdict = {false, VerdictReason::niven_conflict,
                       "phi/2pi = " + turns.str() + " is rational, so cos 2phi is irrational"};
    }
    return out;
}

inline std::vector<GhzPhotonResult> ghz_admissibility(std::span<const GhzChoice> choices) {
    std::vector<GhzPhotonResult> out;
    out.reserve(choices.size());
    for (const auto &c : choices) out.push_back(ghz_counterfactual(c));
    return out;
}

}  // namespace bitsphere
