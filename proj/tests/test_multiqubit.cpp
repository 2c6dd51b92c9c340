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

#include <random>
#include <string>
#include <vector>

#include "bitsphere/multiqubit.hpp"
#include "bitsphere/product_io.hpp"

using namespace bitsphere;

namespace {

// Direct block assembly: each string is a list of (length, negated) runs.
using Runs = std::vector<std::pair<int64_t, bool>>;

std::string assemble(const Runs &runs) {
    std::string out;
    for (auto [len, neg] : runs) out += std::string(static_cast<size_t>(len), neg ? '1' : '0');
    return out;
}

std::string rotate_span(std::string s, int64_t begin, int64_t len, int64_t k) {
    if (len <= 0) return s;
    const int64_t shift = ((k % len) + len) % len;
    std::string part = s.substr(static_cast<size_t>(begin), static_cast<size_t>(len));
    part = part.substr(static_cast<size_t>(shift)) + part.substr(0, static_cast<size_t>(shift));
    s.replace(static_cast<size_t>(begin), static_cast<size_t>(len), part);
    return s;
}

std::array<std::string, 3> direct_three(int64_t n, const std::array<int64_t, 7> &m, const std::array<int64_t, 7> &k) {
    const auto [m1, m2, m3, m4, m5, m6, m7] = m;
    std::string a = assemble({{n - m1, false}, {m1, true}});
    std::string b = assemble({{n - m2, false}, {m2 - m1, true}, {m3, true}, {m1 - m3, false}});
    std::string c = assemble({{n - m4, false},
                              {m4 - m2, true},
                              {m2 - m5, false},
                              {m5 - m1, true},
                              {m6, false},
                              {m3 - m6, true},
                              {m7, false},
                              {m1 - m3 - m7, true}});
    // c-blocks: (a,b), (a,bbar), (abar,bbar), (abar,b) with n4, n5, n6, n7
    const int64_t spans[4][2] = {{0, n - m2}, {n - m2, m2 - m1}, {n - m1, m3}, {n - m1 + m3, m1 - m3}};
    const int64_t c_phase[4] = {k[3], k[4], k[5], k[6]};
    for (int i = 0; i < 4; ++i) c = rotate_span(c, spans[i][0], spans[i][1], c_phase[i]);
    for (std::string *s : {&b, &c}) {
        *s = rotate_span(*s, 0, n - m1, k[1]);
        *s = rotate_span(*s, n - m1, m1, k[2]);
    }
    for (std::string *s : {&a, &b, &c}) *s = rotate_span(*s, 0, n, k[0]);
    return {a, b, c};
}

std::vector<std::array<int64_t, 3>> valid_m(int64_t n) {
    std::vector<std::array<int64_t, 3>> out;
    for (int64_t m1 = 0; m1 <= n; ++m1) {
        for (int64_t m2 = m1; m2 <= n; ++m2) {
            for (int64_t m3 = 0; m3 <= m1; ++m3) out.push_back({m1, m2, m3});
        }
    }
    return out;
}

}  // namespace

TEST(Product2, BlockFixture) {
    const auto s = make_product2(Resolution(8), 4, 4, 0);
    EXPECT_EQ(s.ta().str(), "a:00001111");
    EXPECT_EQ(s.tb().str(), "b:00000000");
    const auto t = make_product2(Resolution(8), 0, 0, 0);
    EXPECT_EQ(t.ta().count_negated() + t.tb().count_negated(), 0u);
    EXPECT_EQ(correlation(t).expectation, DyadicRational(1));
}

TEST(Product2, MatchesDirectAssemblyWithPhases) {
    const int64_t n = 8;
    for (const auto &[m1, m2, m3] : valid_m(n)) {
        for (int64_t k = 0; k < 3; ++k) {
            const int64_t n1 = 3 * k + 1, n2 = k + 2, n3 = 5 * k;
            const auto s = make_product2(Resolution(8), m1, m2, m3, n1, n2, n3);
            std::string a = assemble({{n - m1, false}, {m1, true}});
            std::string b = assemble({{n - m2, false}, {m2 - m1, true}, {m3, true}, {m1 - m3, false}});
            for (std::string *x : {&a, &b}) {
                *x = rotate_span(*x, n - m1, m1, n3);
                *x = rotate_span(*x, 0, n - m1, n2);
                *x = rotate_span(*x, 0, n, n1);
            }
            ASSERT_EQ(s.ta().bits(), a);
            ASSERT_EQ(s.tb().bits(), b);
            ASSERT_EQ(as_family(s).strings()[0], s.ta());
            ASSERT_EQ(as_family(s).strings()[1], s.tb());
        }
    }
}

TEST(Product2, RejectsNegativeBlocks) {
    const Resolution r(8);
    EXPECT_THROW(make_product2(r, 9, 9, 0), ConstraintViolation);
    EXPECT_THROW(make_product2(r, 4, 3, 0), ConstraintViolation);
    EXPECT_THROW(make_product2(r, 4, 4, 5), ConstraintViolation);
    EXPECT_THROW(make_product2(r, -1, 0, 0), ConstraintViolation);
}

TEST(Product2, CorrelationInvariantUnderPhasesExhaustive) {
    const Resolution r(8);
    for (const auto &[m1, m2, m3] : valid_m(8)) {
        const auto s = make_product2(r, m1, m2, m3);
        const auto base = correlation(s);
        EXPECT_EQ(base.total(), 8);
        for (int64_t k = 0; k < 8; ++k) {
            ASSERT_EQ(correlation(zeta1(s, k)), base);
            ASSERT_EQ(correlation(zeta2(s, k)), base);
            ASSERT_EQ(correlation(zeta3(s, k)), base);
        }
        EXPECT_EQ(zeta1(s, 8), s);
    }
}

TEST(Product2, Zeta2MovesOnlyItsSpan) {
    const Resolution r(8);
    for (const auto &[m1, m2, m3] : valid_m(8)) {
        const auto s = make_product2(r, m1, m2, m3);
        for (int64_t k = 1; k < 8; ++k) {
            const auto t = zeta2(s, k);
            for (size_t i = static_cast<size_t>(8 - m1); i < 8; ++i) {
                ASSERT_EQ(t.ta().negated(i), s.ta().negated(i));
                ASSERT_EQ(t.tb().negated(i), s.tb().negated(i));
            }
            const auto u = zeta3(s, k);
            for (size_t i = 0; i < static_cast<size_t>(8 - m1); ++i) ASSERT_EQ(u.tb().negated(i), s.tb().negated(i));
        }
    }
}

TEST(Bell, ExpectationByCounting) {
    for (uint32_t e = 2; e <= 10; ++e) {
        const Resolution r = Resolution::from_exponent(e);
        const auto n = static_cast<int64_t>(r.size());
        for (int64_t m = 0; m <= n / 2; ++m) {
            const auto t = correlation(bell_state(r, m));
            ASSERT_EQ(t.expectation, DyadicRational(4 * m - n, e)) << n << " " << m;
        }
    }
    const auto anti = correlation(bell_state(Resolution(16), 0));
    EXPECT_EQ(anti.expectation, DyadicRational(-1));
    EXPECT_EQ(anti.plain_plain, 0);
    EXPECT_EQ(anti.plain_neg, 8);
    EXPECT_EQ(anti.neg_plain, 8);
    EXPECT_EQ(anti.neg_neg, 0);
    EXPECT_EQ(bell_state(Resolution(16), 0).tb(), BitString::parse("b:1111111100000000"));
    EXPECT_EQ(correlation(bell_state(Resolution(16), 8)).expectation, DyadicRational(1));
    EXPECT_EQ(correlation(bell_state(Resolution(16), 4)).expectation, DyadicRational(0));
    EXPECT_THROW(bell_state(Resolution(16), 9), ConstraintViolation);
}

TEST(Bell, AngleConventions) {
    const Resolution r(1024);
    EXPECT_EQ(bell_cos_theta(r, 256, AngleConvention::counting), DyadicRational(0));
    EXPECT_EQ(bell_cos_theta(r, 256, AngleConvention::paper), DyadicRational(1, 1));
    EXPECT_EQ(bell_m_for_angle(r, 3 * M_PI / 4, AngleConvention::counting), 437);
    EXPECT_EQ(bell_m_for_angle(r, M_PI / 4, AngleConvention::counting), 75);
    EXPECT_EQ(bell_m_for_angle(Resolution(8), 0.0, AngleConvention::paper), 0);
    EXPECT_EQ(bell_m_for_angle(Resolution(8), M_PI, AngleConvention::counting), 4);
    EXPECT_EQ(parse_convention("paper"), AngleConvention::paper);
    EXPECT_THROW(parse_convention("other"), std::invalid_argument);
}

TEST(Product3, ParameterCountAndTrivialCase) {
    const auto s = make_product3(Resolution(8), {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0});
    EXPECT_EQ(s.parameter_count(), 14u);
    for (const auto &b : s.strings()) EXPECT_EQ(b.count_negated(), 0u);
}

TEST(Product3, BlockFixture) {
    const auto s = make_product3(Resolution(8), {4, 6, 2, 7, 5, 1, 1}, {0, 0, 0, 0, 0, 0, 0});
    EXPECT_EQ(s.strings()[0].str(), "a:00001111");
    EXPECT_EQ(s.strings()[1].str(), "b:00111100");
    EXPECT_EQ(s.strings()[2].str(), "c:01010101");
    EXPECT_THROW(make_product3(Resolution(8), {4, 6, 2, 7, 5, 3, 1}, {}), ConstraintViolation);
}

TEST(Product3, MatchesDirectAssemblyRandomised) {
    std::mt19937_64 rng(31);
    const int64_t n = 16;
    int built = 0;
    while (built < 400) {
        auto pick = [&](int64_t lo, int64_t hi) {
            return hi < lo ? lo : lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
        };
        const int64_t m1 = pick(0, n), m2 = pick(m1, n), m3 = pick(0, m1);
        const int64_t m4 = pick(m2, n), m5 = pick(m1, m2), m6 = pick(0, m3), m7 = pick(0, m1 - m3);
        std::array<int64_t, 7> m{m1, m2, m3, m4, m5, m6, m7};
        std::array<int64_t, 7> k{};
        for (auto &v : k) v = pick(0, 40);
        const auto s = make_product3(Resolution(16), m, k);
        const auto expected = direct_three(n, m, k);
        for (size_t i = 0; i < 3; ++i) ASSERT_EQ(s.strings()[i].bits(), expected[i]) << built;
        ++built;
    }
}

TEST(ProductJ, CapAndParameterCounts) {
    for (uint32_t e = 2; e <= 5; ++e) {
        const Resolution r = Resolution::from_exponent(e);
        for (int j = 1; j <= static_cast<int>(e); ++j) {
            const auto m = balanced_m_params(r, j);
            const std::vector<int64_t> n(m.size(), 1);
            const auto s = make_productJ(r, j, m, n);
            EXPECT_EQ(s.parameter_count(), (size_t{1} << (j + 1)) - 2);
            if (j == static_cast<int>(e)) {
                for (int64_t b : s.leaf_blocks()) EXPECT_EQ(b, 1);
                EXPECT_EQ(s.min_leaf_block(), 1);
            }
        }
        const int over = static_cast<int>(e) + 1;
        const std::vector<int64_t> zeros((size_t{1} << over) - 1, 0);
        EXPECT_THROW(make_productJ(r, over, zeros, zeros), EntanglementCapError);
    }
}

TEST(ProductJ, SingleStringIsTString) {
    const Resolution r(16);
    for (int64_t m = 0; m <= 16; ++m) {
        for (int64_t k = 0; k < 16; ++k) {
            const std::vector<int64_t> mp{m}, np{k};
            const auto s = make_productJ(r, 1, mp, np);
            ASSERT_EQ(s.strings()[0].bits(), make_T(Axis("a"), r, m, k).symbols().bits());
        }
    }
}

TEST(ProductJ, ErrorsNameTheNode) {
    const Resolution r(8);
    const std::vector<int64_t> m{4, 2, 5}, n{0, 0, 0};
    try {
        make_productJ(r, 2, m, n);
        FAIL() << "expected a constraint violation";
    } catch (const ConstraintViolation &e) {
        EXPECT_NE(std::string(e.what()).find("node 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(make_productJ(r, 2, std::vector<int64_t>{4, 2}, std::vector<int64_t>{0, 0}), std::invalid_argument);
    EXPECT_THROW(make_productJ(r, 0, {}, {}), ConstraintViolation);
}

TEST(ProductJ, NoiseDiagnosticGrowsTowardsCap) {
    const Resolution r(64);
    double previous = 0.0;
    for (int j = 1; j <= 6; ++j) {
        const auto m = balanced_m_params(r, j);
        const std::vector<int64_t> n(m.size(), 0);
        const double err = make_productJ(r, j, m, n).correlation_sampling_error();
        EXPECT_GT(err, previous);
        previous = err;
    }
    EXPECT_DOUBLE_EQ(previous, 1.0);
}

TEST(FamilyEquivalence, Basics) {
    const auto s = make_product2(Resolution(8), 4, 6, 2, 0, 1, 1);
    for (int64_t k = 0; k < 8; ++k) EXPECT_TRUE(equal_mod_global_perm_family(as_family(s), as_family(zeta1(s, k))));
    // phases only co-rotate within blocks; changing a block count does not
    const auto x = make_productJ(Resolution(8), 2, std::vector<int64_t>{4, 1, 3}, std::vector<int64_t>{0, 0, 0});
    const auto y = make_productJ(Resolution(8), 2, std::vector<int64_t>{4, 1, 3}, std::vector<int64_t>{3, 2, 1});
    const auto z = make_productJ(Resolution(8), 2, std::vector<int64_t>{4, 2, 3}, std::vector<int64_t>{0, 0, 0});
    EXPECT_TRUE(equal_mod_global_perm_family(x, y));
    EXPECT_FALSE(equal_mod_global_perm_family(x, z));
    EXPECT_THROW(equal_mod_global_perm_family(x, make_productJ(Resolution(16), 2, std::vector<int64_t>{8, 4, 4},
                                                                std::vector<int64_t>{0, 0, 0})),
                 std::invalid_argument);
}

TEST(FamilyEquivalence, NegatingOneStringBreaksEquivalence) {
    const Resolution r(8);
    const auto s = make_productJ(r, 2, std::vector<int64_t>{4, 1, 3}, std::vector<int64_t>{0, 0, 0});
    // same b string, a negated: a = 11110000 is the root with m = 4 rotated by 4
    const auto t = make_productJ(r, 2, std::vector<int64_t>{4, 3, 1}, std::vector<int64_t>{4, 0, 0});
    EXPECT_EQ(t.strings()[0], negate(s.strings()[0]));
    EXPECT_NE(pair_correlation(s, 0, 1), pair_correlation(t, 0, 1));
    EXPECT_FALSE(equal_mod_global_perm_family(s, t));
}

TEST(FamilyEquivalence, IsAnEquivalenceRelation) {
    std::mt19937_64 rng(41);
    const Resolution r(8);
    std::vector<ProductStateJ> pool;
    for (const auto &[m1, m2, m3] : valid_m(8)) {
        if (rng() % 6 != 0) continue;
        pool.push_back(as_family(make_product2(r, m1, m2, m3, static_cast<int64_t>(rng() % 8),
                                               static_cast<int64_t>(rng() % 8), static_cast<int64_t>(rng() % 8))));
    }
    for (const auto &a : pool) {
        EXPECT_TRUE(equal_mod_global_perm_family(a, a));
        for (const auto &b : pool) {
            const bool ab = equal_mod_global_perm_family(a, b);
            EXPECT_EQ(ab, equal_mod_global_perm_family(b, a));
            if (!ab) continue;
            for (const auto &c : pool) {
                if (equal_mod_global_perm_family(b, c)) {
                    EXPECT_TRUE(equal_mod_global_perm_family(a, c));
                }
            }
        }
    }
}

TEST(ProductIo, RoundTrip) {
    const auto s = make_product3(Resolution(16), {8, 12, 4, 14, 10, 2, 2}, {1, 2, 3, 4, 5, 6, 7});
    const auto j = to_json(s);
    EXPECT_EQ(j["N"], 16);
    EXPECT_EQ(j["J"], 3);
    EXPECT_EQ(j["m_params"].size(), 7u);
    const auto back = product_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back, s);
    EXPECT_EQ(back.m_params(), s.m_params());
    EXPECT_EQ(back.n_params(), s.n_params());
    auto bad = j;
    bad["strings"][0] = "a:1111111111111111";
    EXPECT_THROW(product_from_json(bad), std::invalid_argument);
}
