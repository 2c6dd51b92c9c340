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

#include <optional>
#include <stdexcept>
#include <vector>

#include "bitsphere/dyadic.hpp"
#include "bitsphere/rational.hpp"
#include "bitsphere/resolution.hpp"

namespace bitsphere {

/// True iff c is one of 0, +-1/2, +-1: the only rational cosines of a
/// rational multiple of 2*pi.
inline bool niven_exception(const Rational &c) {
    if (c.abs() > Rational(1)) throw std::domain_error("cosine magnitude exceeds 1: " + c.str());
    const Rational half(1, 2);
    return c.is_zero() || c.abs() == half || c.abs() == Rational(1);
}

inline bool niven_exception(const DyadicRational &c) {
    if (c.abs() > DyadicRational(1)) throw std::domain_error("cosine magnitude exceeds 1: " + c.str());
    return niven_exception(c.to_rational());
}

/// cos(2*pi*turns) when it is rational, otherwise nullopt. Rational values
/// occur exactly when the reduced denominator of turns is 1, 2, 3, 4 or 6.
inline std::optional<Rational> rational_cos_of_turns(const Rational &turns) {
    switch (turns.den()) {
        case 1:
            return Rational(1);
        case 2:
            return Rational(-1);
        case 3:
            return Rational(-1, 2);
        case 4:
            return Rational(0);
        case 6:
            return Rational(1, 2);
        default:
            return std::nullopt;
    }
}

/// sin(2*pi*turns) when it is rational, via sin(2 pi r) = cos(2 pi (1/4 - r)).
inline std::optional<Rational> rational_sin_of_turns(const Rational &turns) {
    return rational_cos_of_turns(Rational(1, 4) - turns);
}

}  // namespace bitsphere
