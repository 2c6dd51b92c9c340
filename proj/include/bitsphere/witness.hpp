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

#include "bitsphere/rational.hpp"

namespace bitsphere {

/// The rational p/q with q <= max_denominator lying within 1/(2 q max_denominator)
/// of value, if any. At most one fraction can qualify, and by Legendre's
/// theorem it is a continued-fraction convergent of value, so only
/// convergents are examined.
///
/// Absence is evidence of irrationality at this denominator bound, not proof.
inline std::optional<Rational> rationality_witness(double value, int64_t max_denominator) {
    if (!std::isfinite(value)) throw std::domain_error("rationality witness needs a finite value");
    if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
    if (std::fabs(value) > 0x1p52) throw std::domain_error("rationality witness value out of range");

    const long double x = value;
    const long double bound = static_cast<long double>(max_denominator);
    auto accept = [&](int64_t p, int64_t q) {
        long double err = std::fabs(x - static_cast<long double>(p) / static_cast<long double>(q));
        return err <= 1.0L / (2.0L * static_cast<long double>(q) * bound);
    };

    long double rest = x;
    long double a = std::floor(rest);
    __int128 p_prev = 1, q_prev = 0;
    __int128 p = static_cast<__int128>(a), q = 1;
    for (;;) {
        if (accept(static_cast<int64_t>(p), static_cast<int64_t>(q))) {
            return Rational(static_cast<int64_t>(p), static_cast<int64_t>(q));
        }
        long double frac = rest - a;
        if (frac <= 0.0L) return std::nullopt;
        rest = 1.0L / frac;
        if (rest > 2.0L * bound + 2.0L) return std::nullopt;  // next convergent's denominator exceeds the bound
        a = std::floor(rest);
        __int128 ai = static_cast<__int128>(a);
        __int128 p_next = ai * p + p_prev;
        __int128 q_next = ai * q + q_prev;
        if (q_next > max_denominator) return std::nullopt;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
}

}  // namespace bitsphere
