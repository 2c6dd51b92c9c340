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
#include <numbers>

#include "bitsphere/bloch_map.hpp"
#include "bitsphere/uncertainty.hpp"

using namespace bitsphere;

TEST(SkeletonPoint, RangeChecks) {
    const Resolution r(8);
    EXPECT_THROW(SkeletonPoint(Frame::z, r, 0, 1), ConstraintViolation);
    EXPECT_THROW(SkeletonPoint(Frame::z, r, 5, 1), ConstraintViolation);
    EXPECT_THROW(SkeletonPoint(Frame::z, r, 1, 0), ConstraintViolation);
    EXPECT_THROW(SkeletonPoint(Frame::z, r, 1, 9), ConstraintViolation);
    EXPECT_NO_THROW(SkeletonPoint(Frame::x, r, 4, 8));
}

TEST(SkeletonPoint, BitStringForPoint) {
    const Resolution r(8);
    const auto t = bitstring_for_point(SkeletonPoint(Frame::z, r, 1, 8));
    EXPECT_EQ(t.symbols().str(), "z:00000001");
    EXPECT_EQ(SkeletonPoint(Frame::x, r, 1, 3).up_fraction(), DyadicRational(7, 3));
    EXPECT_EQ(SkeletonPoint(Frame::z, r, 4, 3).up_fraction(), DyadicRational(1, 3));
}

TEST(SkeletonPoint, UpFractionMatchesCountingExhaustive) {
    for (uint64_t n : {8u, 64u}) {
        const Resolution r(n);
        for (Frame f : {Frame::x, Frame::y, Frame::z}) {
            for (int64_t m = 1; m <= static_cast<int64_t>(r.half()); ++m) {
                for (int64_t k = 1; k <= static_cast<int64_t>(n); ++k) {
                    const SkeletonPoint p(f, r, m, k);
                    const auto s = stats(bitstring_for_point(p));
                    const int64_t plain = static_cast<int64_t>(bitstring_for_point(p).symbols().count_plain());
                    ASSERT_EQ(s.up_fraction, DyadicRational(plain, r.exponent()));
                    ASSERT_EQ(s.up_fraction, DyadicRational(1) - DyadicRational(2 * m - 1, r.exponent()));
                    ASSERT_EQ(s.mean, p.cos_theta());
                    ASSERT_EQ(s.mean, s.up_fraction + s.up_fraction - DyadicRational(1));
                    ASSERT_EQ(s.mean * s.mean + s.variance, DyadicRational(1));
                }
            }
        }
    }
}

TEST(Stats, Fixtures) {
    const Resolution r(8);
    const auto balanced = stats(make_T(Axis::x(), r, 4, 0));
    EXPECT_EQ(balanced.mean, DyadicRational(0));
    EXPECT_EQ(balanced.variance, DyadicRational(1));
    EXPECT_EQ(stats(make_T(Axis::x(), r, 1, 5)).mean, DyadicRational(3, 2));
    for (int64_t k = 0; k <= 8; ++k) {
        const auto s = stats(make_T(Axis::y(), r, k, 0));
        EXPECT_EQ(s.variance, DyadicRational(1) - s.mean * s.mean);
    }
}

TEST(Hilbert, NormAndPhase) {
    const Resolution r(64);
    for (Frame f : {Frame::x, Frame::y, Frame::z}) {
        for (int64_t m = 1; m <= 32; ++m) {
            for (int64_t n = 1; n <= 64; ++n) {
                const auto h = to_hilbert(SkeletonPoint(f, r, m, n));
                ASSERT_NEAR(h.norm_squared(), 1.0, 1e-12);
                if (m > 0) {
                    const double expected = std::remainder(2 * std::numbers::pi * static_cast<double>(n) / 64.0,
                                                           2 * std::numbers::pi);
                    ASSERT_NEAR(std::remainder(std::arg(h.amp1) - expected, 2 * std::numbers::pi), 0.0, 1e-12);
                }
            }
        }
    }
    const auto top = to_hilbert(SkeletonPoint(Frame::z, r, 1, 64));
    EXPECT_NEAR(top.amp0.real(), std::sqrt(1.0 - 1.0 / 64), 1e-15);
    EXPECT_GT(top.amp1.real(), 0.0);
    EXPECT_NEAR(top.amp1.imag(), 0.0, 1e-15);
}

TEST(SkeletonPoint, DirectionMatchesStatistics) {
    const Resolution r(16);
    const SkeletonPoint p(Frame::y, r, 3, 5);
    const Vec3 d = p.direction();
    EXPECT_NEAR(dot(d, d), 1.0, 1e-14);
    EXPECT_NEAR(d[1], p.cos_theta().to_double(), 1e-14);
}

TEST(Uncertainty, TrivialCorners) {
    EXPECT_NEAR(uncertainty_sample({1, 0, 0}).slack, 0.0, 0.0);
    const auto pole = uncertainty_sample({0, 0, 1});
    EXPECT_DOUBLE_EQ(pole.slack, 0.0);
    EXPECT_DOUBLE_EQ(pole.theta, 0.0);
    const double s = std::sqrt(0.5);
    EXPECT_GE(uncertainty_sample({s, s, 0}).slack, 0.0);
}

TEST(Uncertainty, SlackEqualsProductOfSquares) {
    // (1 - x^2)(1 - y^2) - z^2 = x^2 y^2 on the unit sphere
    for (uint64_t i = 0; i < 1000; ++i) {
        const Vec3 p = sphere_point(99, i);
        EXPECT_NEAR(uncertainty_sample(p).slack, p[0] * p[0] * p[1] * p[1], 1e-14);
    }
}

TEST(Uncertainty, GeometricDeterministic) {
    std::vector<UncertaintySample> a, b;
    const auto r1 = verify_uncertainty_geometric(2000, 4, &a);
    const auto r2 = verify_uncertainty_geometric(2000, 4, &b);
    EXPECT_EQ(r1.violations, 0u);
    EXPECT_EQ(r1.min_slack, r2.min_slack);
    ASSERT_EQ(a.size(), 2000u);
    EXPECT_EQ(a.back().slack, b.back().slack);
    EXPECT_THROW(verify_uncertainty_geometric(0, 1), std::invalid_argument);
}

TEST(Uncertainty, SphereSamplingIsUniformInZ) {
    int upper = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) upper += sphere_point(1, static_cast<uint64_t>(i))[2] > 0.5 ? 1 : 0;
    EXPECT_NEAR(static_cast<double>(upper) / n, 0.25, 0.015);
}

TEST(Uncertainty, NearestSkeletonIsActuallyNearest) {
    const Resolution r(32);
    for (uint64_t i = 0; i < 30; ++i) {
        const Vec3 p = sphere_point(8, i);
        const auto best = nearest_skeleton_point(r, Frame::z, p);
        const double got = std::acos(std::clamp(dot(best.point.direction(), p), -1.0, 1.0));
        EXPECT_NEAR(got, best.angular_distance, 1e-9);
        for (int64_t m = 1; m <= 16; ++m) {
            for (int64_t n = 1; n <= 32; ++n) {
                const double d = std::acos(std::clamp(dot(SkeletonPoint(Frame::z, r, m, n).direction(), p), -1.0, 1.0));
                ASSERT_GE(d, best.angular_distance - 1e-9);
            }
        }
    }
}

TEST(Uncertainty, SkeletonNeighbourhoods) {
    const Resolution r(1024);
    const auto equator = evaluate_neighbourhood(r, {std::sqrt(0.5), std::sqrt(0.5), 0.0}, 0.1);
    EXPECT_TRUE(equator.complete);
    EXPECT_TRUE(equator.satisfied);
    EXPECT_GT(equator.excess.to_double(), 0.2);
    const auto pole = evaluate_neighbourhood(r, {0.0, 0.0, 1.0}, 0.1);
    EXPECT_TRUE(pole.complete);
    EXPECT_TRUE(pole.satisfied);
    EXPECT_LE(std::fabs(pole.excess.to_double()), 0.4);

    const auto rep = verify_uncertainty_skeleton(r, 0.1, 500, 2);
    EXPECT_EQ(rep.violations, 0u);
    EXPECT_EQ(rep.evaluated + rep.missing_neighbourhoods, 500u);
    EXPECT_GT(rep.evaluated, 0u);
}

TEST(Uncertainty, TinyEpsilonReportsMissingNeighbourhoods) {
    const auto rep = verify_uncertainty_skeleton(Resolution(8), 1e-6, 50, 3);
    EXPECT_EQ(rep.missing_neighbourhoods, 50u);
    EXPECT_EQ(rep.evaluated, 0u);
}
