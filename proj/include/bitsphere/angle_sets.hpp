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

#include <cstdint>
#include <string>
#include <vector>

#include "bitsphere/dyadic.hpp"
#include "bitsphere/errors.hpp"
#include "bitsphere/resolution.hpp"

namespace bitsphere {

/// X1: phi/2pi = n/N for 1 <= n <= N.
/// X2: cos(theta) = 1 - (2m - 1)/(N/2) for 1 <= m <= N/2.
/// X3: sin(theta) takes the X2 values.
enum class AngleSet { X1, X2, X3 };

inline const char *to_string(AngleSet s) {
    switch (s) {
        case AngleSet::X1:
            return "X1";
        case AngleSet::X2:
            return "X2";
        default:
            return "X3";
    }
}

struct AngleSetElement {
    AngleSet set;
    int64_t index;
    Resolution resolution;
    /// phi/2pi for X1, cos(theta) for X2, sin(theta) for X3.
    DyadicRational value;
};

/// 1 - (2m - 1)/N' as an exact dyadic, the X2 cosine for index m.
inline DyadicRational x2_value(Resolution r, int64_t m) {
    const auto half = static_cast<int64_t>(r.half());
    if (m < 1 || m > half) {
        throw ConstraintViolation("X2 index must lie in [1, " + std::to_string(half) + "], got " + std::to_string(m));
    }
    return DyadicRational(half - 2 * m + 1, r.exponent() - 1);
}

/// n/N, the X1 turn fraction for index n.
inline DyadicRational x1_value(Resolution r, int64_t n) {
    const auto size = static_cast<int64_t>(r.size());
    if (n < 1 || n > size) {
        throw ConstraintViolation("X1 index must lie in [1, " + std::to_string(size) + "], got " + std::to_string(n));
    }
    return DyadicRational(n, r.exponent());
}

/// 2m - 1 - N', the integer numerator of -cos(theta) * N' for X2 index m.
inline int64_t x2_offset(Resolution r, int64_t m) {
    return 2 * m - 1 - static_cast<int64_t>(r.half());
}

inline std::vector<AngleSetElement> x1_set(Resolution r) {
    std::vector<AngleSetElement> out;
    out.reserve(r.size());
    for (int64_t n = 1; n <= static_cast<int64_t>(r.size()); ++n) out.push_back({AngleSet::X1, n, r, x1_value(r, n)});
    return out;
}

inline std::vector<AngleSetElement> x2_set(Resolution r) {
    std::vector<AngleSetElement> out;
    out.reserve(r.half());
    for (int64_t m = 1; m <= static_cast<int64_t>(r.half()); ++m) out.push_back({AngleSet::X2, m, r, x2_value(r, m)});
    return out;
}

inline std::vector<AngleSetElement> x3_set(Resolution r) {
    std::vector<AngleSetElement> out;
    out.reserve(r.half());
    for (int64_t m = 1; m <= static_cast<int64_t>(r.half()); ++m) out.push_back({AngleSet::X3, m, r, x2_value(r, m)});
    return out;
}

}  // namespace bitsphere
