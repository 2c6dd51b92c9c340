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

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bitsphere/errors.hpp"

namespace bitsphere {

namespace detail {

inline int64_t narrow_checked(__int128 v, const char *what) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw ArithmeticOverflow(std::string("rational overflow in ") + what);
    }
    return static_cast<int64_t>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

/// Reduced fraction p/q with q > 0 and 64-bit parts. Intermediates are
/// 128-bit; a result that does not fit throws ArithmeticOverflow.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(int64_t n) : num_(n), den_(1) {  // NOLINT: implicit from integer
    }
    Rational(int64_t n, int64_t d) {
        assign(n, d);
    }

    int64_t num() const {
        return num_;
    }
    int64_t den() const {
        return den_;
    }
    bool is_zero() const {
        return num_ == 0;
    }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    long double to_long_double() const {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

    /// "p/q", or "p" when q == 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p", "p/q" and "-p/q".
    static Rational parse(const std::string &text) {
        auto slash = text.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                int64_t n = std::stoll(text, &used);
                if (used != text.size()) throw std::invalid_argument(text);
                return Rational(n);
            }
            std::string a = text.substr(0, slash);
            std::string b = text.substr(slash + 1);
            int64_t n = std::stoll(a, &used);
            if (used != a.size()) throw std::invalid_argument(text);
            int64_t d = std::stoll(b, &used);
            if (used != b.size()) throw std::invalid_argument(text);
            return Rational(n, d);
        } catch (const std::out_of_range &) {
            throw std::invalid_argument("rational literal out of range: " + text);
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("malformed rational literal: '" + text + "'");
        }
    }

    friend Rational operator+(const Rational &a, const Rational &b) {
        return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_, "add");
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        return a + (-b);
    }
    friend Rational operator*(const Rational &a, const Rational &b) {
        return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_, "mul");
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_, "div");
    }
    Rational operator-() const {
        if (num_ == INT64_MIN) throw ArithmeticOverflow("rational negate");
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational &operator+=(const Rational &o) {
        return *this = *this + o;
    }
    Rational &operator-=(const Rational &o) {
        return *this = *this - o;
    }
    Rational &operator*=(const Rational &o) {
        return *this = *this * o;
    }

    Rational abs() const {
        return num_ < 0 ? -*this : *this;
    }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }

    friend std::ostream &operator<<(std::ostream &out, const Rational &r) {
        return out << r.str();
    }

  private:
    static Rational from128(__int128 n, __int128 d, const char *what) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = detail::narrow_checked(n, what);
        r.den_ = detail::narrow_checked(d, what);
        return r;
    }

    void assign(int64_t n, int64_t d) {
        *this = from128(n, d, "construct");
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
};

}  // namespace bitsphere
