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

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bitsphere/errors.hpp"
#include "bitsphere/rational.hpp"

namespace bitsphere {

/// Exact p / 2^k. Canonical form keeps p odd whenever k > 0, and zero is
/// stored as 0 / 2^0, so equality is field-wise.
///
/// Every cos(theta), sin^2(theta), squared amplitude and phi/2pi value of a
/// legal state is one of these. Sums and products never round; a result whose
/// numerator no longer fits in 64 bits throws ArithmeticOverflow.
class DyadicRational {
  public:
    constexpr DyadicRational() = default;
    DyadicRational(int64_t integer) : num_(integer), log2_den_(0) {  // NOLINT: implicit from integer
    }
    DyadicRational(int64_t numerator, uint32_t log2_denominator) {
        assign(numerator, log2_denominator);
    }

    /// p/q where q must be a positive power of two.
    static DyadicRational from_ratio(int64_t p, int64_t q) {
        if (q <= 0 || !std::has_single_bit(static_cast<uint64_t>(q))) {
            throw std::invalid_argument("dyadic denominator must be a positive power of two, got " +
                                        std::to_string(q));
        }
        return DyadicRational(p, static_cast<uint32_t>(std::countr_zero(static_cast<uint64_t>(q))));
    }

    /// Exact conversion; fails when r's denominator is not a power of two.
    static DyadicRational from_rational(const Rational &r) {
        return from_ratio(r.num(), r.den());
    }

    int64_t numerator() const {
        return num_;
    }
    uint32_t log2_denominator() const {
        return log2_den_;
    }
    bool is_zero() const {
        return num_ == 0;
    }

    Rational to_rational() const {
        if (log2_den_ > 62) throw ArithmeticOverflow("dyadic denominator exceeds 2^62");
        return Rational(num_, int64_t{1} << log2_den_);
    }
    double to_double() const {
        return std::ldexp(static_cast<double>(num_), -static_cast<int>(log2_den_));
    }
    long double to_long_double() const {
        return std::ldexp(static_cast<long double>(num_), -static_cast<int>(log2_den_));
    }

    /// "p/q" with q written out in decimal, or "p" for integers.
    std::string str() const {
        if (log2_den_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/" + power_of_two_decimal(log2_den_);
    }

    friend DyadicRational operator+(const DyadicRational &a, const DyadicRational &b) {
        uint32_t k = std::max(a.log2_den_, b.log2_den_);
        __int128 sum = a.lifted(k) + b.lifted(k);
        return make_reduced(sum, k);
    }
    friend DyadicRational operator-(const DyadicRational &a, const DyadicRational &b) {
        return a + (-b);
    }
    friend DyadicRational operator*(const DyadicRational &a, const DyadicRational &b) {
        __int128 p = static_cast<__int128>(a.num_) * b.num_;
        return make_reduced(p, a.log2_den_ + b.log2_den_);
    }
    DyadicRational operator-() const {
        if (num_ == INT64_MIN) throw ArithmeticOverflow("dyadic negate");
        DyadicRational r;
        r.num_ = -num_;
        r.log2_den_ = log2_den_;
        return r;
    }
    DyadicRational &operator+=(const DyadicRational &o) {
        return *this = *this + o;
    }
    DyadicRational &operator-=(const DyadicRational &o) {
        return *this = *this - o;
    }
    DyadicRational &operator*=(const DyadicRational &o) {
        return *this = *this * o;
    }

    /// this / 2^k.
    DyadicRational halved(uint32_t k = 1) const {
        return make_reduced(num_, log2_den_ + k);
    }

    DyadicRational abs() const {
        return num_ < 0 ? -*this : *this;
    }

    friend bool operator==(const DyadicRational &, const DyadicRational &) = default;

    friend std::strong_ordering operator<=>(const DyadicRational &a, const DyadicRational &b) {
        int sa = (a.num_ > 0) - (a.num_ < 0);
        int sb = (b.num_ > 0) - (b.num_ < 0);
        if (sa != sb) return sa <=> sb;
        if (sa == 0) return std::strong_ordering::equal;
        // Same nonzero sign: compare magnitudes |a|*2^(k-ka) vs |b|*2^(k-kb).
        uint32_t ka = a.log2_den_;
        uint32_t kb = b.log2_den_;
        uint64_t ma = magnitude(a.num_);
        uint64_t mb = magnitude(b.num_);
        std::strong_ordering mag = compare_scaled(ma, ka, mb, kb);
        return sa > 0 ? mag : 0 <=> mag;
    }

    friend std::ostream &operator<<(std::ostream &out, const DyadicRational &d) {
        return out << d.str();
    }

  private:
    static uint64_t magnitude(int64_t v) {
        return v < 0 ? static_cast<uint64_t>(-(v + 1)) + 1 : static_cast<uint64_t>(v);
    }

    static std::string power_of_two_decimal(uint32_t k) {
        if (k < 64) return std::to_string(uint64_t{1} << k);
        std::string digits = "1";  // little-endian decimal digits
        for (uint32_t i = 0; i < k; ++i) {
            int carry = 0;
            for (char &c : digits) {
                int v = (c - '0') * 2 + carry;
                c = static_cast<char>('0' + v % 10);
                carry = v / 10;
            }
            if (carry) digits.push_back(static_cast<char>('0' + carry));
        }
        return std::string(digits.rbegin(), digits.rend());
    }

    // ma / 2^ka versus mb / 2^kb for positive magnitudes.
    static std::strong_ordering compare_scaled(uint64_t ma, uint32_t ka, uint64_t mb, uint32_t kb) {
        if (ka == kb) return ma <=> mb;
        if (ka > kb) return 0 <=> compare_scaled(mb, kb, ma, ka);
        // ka < kb: compare ma * 2^(kb-ka) with mb.
        uint32_t shift = kb - ka;
        if (shift >= 64) return std::strong_ordering::greater;
        unsigned __int128 lifted = static_cast<unsigned __int128>(ma) << shift;
        return lifted <=> static_cast<unsigned __int128>(mb);
    }

    __int128 lifted(uint32_t k) const {
        uint32_t shift = k - log2_den_;
        if (num_ == 0) return 0;
        if (shift > 62) throw ArithmeticOverflow("dyadic alignment shift too large");
        return static_cast<__int128>(num_) * (static_cast<__int128>(1) << shift);
    }

    static DyadicRational make_reduced(__int128 p, uint32_t k) {
        DyadicRational r;
        if (p == 0) return r;
        while (k > 0 && (p & 1) == 0) {
            p >>= 1;
            --k;
        }
        r.num_ = detail::narrow_checked(p, "dyadic arithmetic");
        r.log2_den_ = k;
        return r;
    }

    void assign(int64_t p, uint32_t k) {
        *this = make_reduced(p, k);
    }

    int64_t num_ = 0;
    uint32_t log2_den_ = 0;
};

}  // namespace bitsphere
