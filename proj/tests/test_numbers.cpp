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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bitsphere/dyadic.hpp"
#include "bitsphere/errors.hpp"
#include "bitsphere/rational.hpp"
#include "bitsphere/witness.hpp"

using namespace bitsphere;

TEST(Rational, ReducesAndNormalisesSign) {
    Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(0, -5), Rational(0));
    EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, ArithmeticMatchesCrossMultiplication) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int64_t> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        const int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational x(a, b), y(c, d);
        EXPECT_EQ(x + y, Rational(a * d + c * b, b * d));
        EXPECT_EQ(x - y, Rational(a * d - c * b, b * d));
        EXPECT_EQ(x * y, Rational(a * c, b * d));
        if (c != 0) {
            EXPECT_EQ(x / y, Rational(a * d, b * c));
        }
        EXPECT_EQ(x < y, a * d < c * b);
    }
}

TEST(Rational, OverflowIsReported) {
    const Rational big(INT64_MAX / 2 + 1, 1);
    EXPECT_THROW(big * big, ArithmeticOverflow);
    EXPECT_THROW(-Rational(INT64_MIN), ArithmeticOverflow);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("-3/12"), Rational(-1, 4));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational(-1, 4).str(), "-1/4");
    EXPECT_EQ(Rational(5).str(), "5");
    EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("99999999999999999999"), std::invalid_argument);
}

TEST(Dyadic, CanonicalForm) {
    const auto d = DyadicRational::from_ratio(6, 8);
    EXPECT_EQ(d.numerator(), 3);
    EXPECT_EQ(d.log2_denominator(), 2u);
    EXPECT_EQ(DyadicRational(4, 3), DyadicRational::from_ratio(1, 2));
    EXPECT_EQ(DyadicRational(0, 9).log2_denominator(), 0u);
    EXPECT_THROW(DyadicRational::from_ratio(1, 3), std::invalid_argument);
}

TEST(Dyadic, ArithmeticAgreesWithRational) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int64_t> num(-5000, 5000);
    std::uniform_int_distribution<uint32_t> k(0, 20);
    for (int i = 0; i < 2000; ++i) {
        const DyadicRational x(num(rng), k(rng)), y(num(rng), k(rng));
        EXPECT_EQ((x + y).to_rational(), x.to_rational() + y.to_rational());
        EXPECT_EQ((x - y).to_rational(), x.to_rational() - y.to_rational());
        EXPECT_EQ((x * y).to_rational(), x.to_rational() * y.to_rational());
        EXPECT_EQ(x < y, x.to_rational() < y.to_rational());
        EXPECT_EQ(x == y, x.to_rational() == y.to_rational());
        EXPECT_EQ(x.halved(3).to_rational(), x.to_rational() / Rational(8));
    }
}

TEST(Dyadic, ExtremeComparisons) {
    const DyadicRational lo(INT64_MIN, 0), hi(INT64_MAX, 0);
    EXPECT_LT(lo, hi);
    EXPECT_LT(lo, DyadicRational(-1, 62));
    EXPECT_GT(DyadicRational(1, 62), DyadicRational(0));
    EXPECT_LT(DyadicRational(1, 63), DyadicRational(1, 62));
}

TEST(Dyadic, PrintsLargeDenominators) {
    EXPECT_EQ(DyadicRational(3, 4).str(), "3/16");
    EXPECT_EQ(DyadicRational(-5).str(), "-5");
    EXPECT_EQ(DyadicRational(1, 70).str(), "1/1180591620717411303424");
    EXPECT_DOUBLE_EQ(DyadicRational(1, 70).to_double(), std::ldexp(1.0, -70));
}

TEST(Witness, RecoversSimpleFractions) {
    EXPECT_EQ(rationality_witness(0.75, 64), Rational(3, 4));
    EXPECT_EQ(rationality_witness(1.0 / 3.0 + 1e-18, 100), Rational(1, 3));
    EXPECT_EQ(rationality_witness(-2.0, 1), Rational(-2));
}

TEST(Witness, NoneForSqrtTwoOverTwo) {
    EXPECT_FALSE(rationality_witness(std::sqrt(2.0) / 2.0, 1'000'000).has_value());
}

TEST(Witness, RandomFractionsWithinBound) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int64_t> den(1, 10'000);
    for (int i = 0; i < 3000; ++i) {
        const int64_t q = den(rng);
        std::uniform_int_distribution<int64_t> num(-3 * q, 3 * q);
        const Rational r(num(rng), q);
        const auto w = rationality_witness(r.to_double(), 10'000);
        ASSERT_TRUE(w.has_value()) << r;
        EXPECT_EQ(*w, r);
    }
}

TEST(Witness, RejectsBadInput) {
    EXPECT_THROW(rationality_witness(std::nan(""), 10), std::domain_error);
    EXPECT_THROW(rationality_witness(INFINITY, 10), std::domain_error);
    EXPECT_THROW(rationality_witness(0.5, 0), std::invalid_argument);
}
