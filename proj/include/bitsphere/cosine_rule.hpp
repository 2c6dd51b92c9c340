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
#include <stdexcept>

#include "bitsphere/dyadic.hpp"
#include "bitsphere/errors.hpp"
#include "bitsphere/rational.hpp"

// Spherical cosine rule
//   cos t' = cos t1 cos t2 + sin t1 sin t2 cos g
// split into its rational part cos t1 cos t2 and the residual
// sin t1 sin t2 cos g, whose square is rational whenever the three inputs are.

namespace bitsphere {

namespace detail {

inline void check_cosine(const Rational &c, const char *what) {
    if (c.abs() > Rational(1)) throw std::domain_error(std::string(what) + " has magnitude above 1: " + c.str());
    if (c.abs() == Rational(1)) {
        throw DegenerateTriangleError(std::string(what) + " = +-1 puts a triangle vertex at a pole");
    }
}

}  // namespace detail

/// (cos t' - cos t1 cos t2)^2 = (1 - cos^2 t1)(1 - cos^2 t2) cos^2 g, exactly.
inline Rational cos_rule_squared(const Rational &cos_t1, const Rational &cos_t2, const Rational &cos_gamma_sq) {
    detail::check_cosine(cos_t1, "cos t1");
    detail::check_cosine(cos_t2, "cos t2");
    if (cos_gamma_sq < Rational(0) || cos_gamma_sq > Rational(1)) {
        throw std::domain_error("cos^2 gamma must lie in [0, 1], got " + cos_gamma_sq.str());
    }
    const Rational sin_sq_1 = Rational(1) - cos_t1 * cos_t1;
    const Rational sin_sq_2 = Rational(1) - cos_t2 * cos_t2;
    return sin_sq_1 * sin_sq_2 * cos_gamma_sq;
}

inline Rational cos_rule_squared(const DyadicRational &cos_t1, const DyadicRational &cos_t2,
                                 const Rational &cos_gamma_sq) {
    return cos_rule_squared(cos_t1.to_rational(), cos_t2.to_rational(), cos_gamma_sq);
}

/// cos^2(phi - Phi) = (cos t' - cos t cos T)^2 / ((1 - cos^2 t)(1 - cos^2 T)).
/// Rational whenever the three side cosines are; such a value with
/// (phi - Phi)/2pi also rational must be a Niven exception.
inline Rational azimuth_cos_squared(const Rational &cos_t1, const Rational &cos_t2, const Rational &cos_tprime) {
    detail::check_cosine(cos_t1, "cos t1");
    detail::check_cosine(cos_t2, "cos t2");
    if (cos_tprime.abs() > Rational(1)) throw std::domain_error("cos t' has magnitude above 1");
    const Rational diff = cos_tprime - cos_t1 * cos_t2;
    return diff * diff / ((Rational(1) - cos_t1 * cos_t1) * (Rational(1) - cos_t2 * cos_t2));
}

/// Floating-point third side: cos t1 cos t2 + sin t1 sin t2 cos(2 pi gamma_turns).
inline long double cos_rule_third_side(const Rational &cos_t1, const Rational &cos_t2, long double gamma_turns) {
    detail::check_cosine(cos_t1, "cos t1");
    detail::check_cosine(cos_t2, "cos t2");
    const long double c1 = cos_t1.to_long_double();
    const long double c2 = cos_t2.to_long_double();
    const long double two_pi = 2.0L * 3.141592653589793238462643383279502884L;
    return c1 * c2 + std::sqrt(1.0L - c1 * c1) * std::sqrt(1.0L - c2 * c2) * std::cos(two_pi * gamma_turns);
}

}  // namespace bitsphere
