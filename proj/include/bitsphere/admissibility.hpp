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

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "bitsphere/cosine_rule.hpp"
#include "bitsphere/rational.hpp"
#include "bitsphere/resolution.hpp"
#include "bitsphere/witness.hpp"

namespace bitsphere {

enum class VerdictReason { rational_cos_ok, niven_conflict, triangle_third_side, denominator_witness_absent };

inline const char *to_string(VerdictReason r) {
    switch (r) {
        case VerdictReason::rational_cos_ok:
            return "RATIONAL_COS_OK";
        case VerdictReason::niven_conflict:
            return "NIVEN_CONFLICT";
        case VerdictReason::triangle_third_side:
            return "TRIANGLE_THIRD_SIDE";
        default:
            return "DENOMINATOR_WITNESS_ABSENT";
    }
}

/// Whether a hypothetical measurement on the same hidden variable satisfies
/// the rationality constraints of the discretised sphere.
struct AdmissibilityVerdict {
    bool admissible = false;
    VerdictReason reason = VerdictReason::triangle_third_side;
    std::string details;

    bool operator==(const AdmissibilityVerdict &) const = default;

    nlohmann::json to_json() const {
        return {{"admissible", admissible}, {"reason", to_string(reason)}, {"details", details}};
    }
};

/// Bound used to tell "rational with an illegal denominator" apart from
/// "no rational witness at all".
/// Distance below which a computed cosine counts as sitting on the 1/N grid.
inline constexpr long double kGridTolerance = 1e-12L;

/// Reversed-order check for a sequential Stern-Gerlach triple A -> B -> C:
/// with rational cos AB, cos BC and internal angle gamma at B, is cos AC a
/// legal cosine at resolution N, i.e. a multiple of 1/N?
inline AdmissibilityVerdict sg_counterfactual_order_check(const Rational &cos_ab, const Rational &cos_bc,
                                                          const Rational &gamma_turns, Resolution r) {
    const long double c = cos_rule_third_side(cos_ab, cos_bc, gamma_turns.to_long_double());
    const auto size = static_cast<int64_t>(r.size());
    const std::string base = "cos AC ~ " + std::to_string(static_cast<double>(c));

    const long double k = std::nearbyint(c * static_cast<long double>(size));
    if (std::fabs(c - k / static_cast<long double>(size)) <= kGridTolerance) {
        return {true, VerdictReason::rational_cos_ok, base + " = " + Rational(static_cast<int64_t>(k), size).str()};
    }
    if (auto w = rationality_witness(static_cast<double>(c), size)) {
        return {false, VerdictReason::denominator_witness_absent,
                base + " is near " + w->str() + " but not on the 1/" + std::to_string(size) + " grid"};
    }
    return {false, VerdictReason::triangle_third_side,
            base + " has no rational witness up to denominator " + std::to_string(size)};
}

}  // namespace bitsphere
