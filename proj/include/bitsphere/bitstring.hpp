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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitsphere/errors.hpp"
#include "bitsphere/resolution.hpp"

namespace bitsphere {

/// Name of a two-letter alphabet {a, a-bar}. The three spatial axes are x, y
/// and z; multi-string states use a, b, c, ... by default.
class Axis {
  public:
    Axis() : name_("a") {
    }
    explicit Axis(std::string name) : name_(std::move(name)) {
        if (name_.empty() || name_.find(':') != std::string::npos || name_.find(',') != std::string::npos) {
            throw std::invalid_argument("axis label must be non-empty and contain no ':' or ','");
        }
    }
    static Axis x() {
        return Axis("x");
    }
    static Axis y() {
        return Axis("y");
    }
    static Axis z() {
        return Axis("z");
    }
    const std::string &name() const {
        return name_;
    }
    bool operator==(const Axis &) const = default;

  private:
    std::string name_;
};

/// Fixed-length sequence of symbols over one axis alphabet. Bit 0 is the
/// plain symbol a and bit 1 its negation a-bar. Symbols are packed 64 per
/// word; unused high bits of the last word are always zero.
///
/// Full-length strings have a power-of-two length N >= 4 (see Resolution).
/// Half strings, quarter blocks and product-state blocks are shorter, so the
/// type itself only requires a positive length.
class BitString {
  public:
    BitString() = default;

    /// All-positive string of the given length.
    BitString(Axis axis, size_t length) : axis_(std::move(axis)), size_(length), words_((length + 63) / 64, 0) {
        if (length == 0) throw std::invalid_argument("bit string must have positive length");
    }

    /// From a 0/1 pattern, e.g. "00110".
    static BitString from_bits(Axis axis, std::string_view bits) {
        BitString s(std::move(axis), bits.size());
        for (size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                s.set(i, true);
            } else if (bits[i] != '0') {
                throw std::invalid_argument("bit pattern may only contain '0' and '1'");
            }
        }
        return s;
    }

    /// Parses the canonical text form "axis:bits", e.g. "x:0000111100001111".
    static BitString parse(std::string_view text) {
        auto colon = text.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("bit string text must look like 'axis:0101...'");
        }
        return from_bits(Axis(std::string(text.substr(0, colon))), text.substr(colon + 1));
    }

    const Axis &axis() const {
        return axis_;
    }
    size_t size() const {
        return size_;
    }

    /// True when position i holds the negated symbol.
    bool negated(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool negated) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (negated) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    size_t count_negated() const {
        size_t total = 0;
        for (uint64_t w : words_) total += static_cast<size_t>(std::popcount(w));
        return total;
    }
    size_t count_plain() const {
        return size_ - count_negated();
    }

    /// Copy of positions [begin, begin + length).
    BitString slice(size_t begin, size_t length) const {
        if (begin + length > size_) throw std::out_of_range("bit string slice out of range");
        BitString out(axis_, length);
        for (size_t i = 0; i < length; ++i) out.set(i, negated(begin + i));
        return out;
    }

    /// Bits as '0'/'1' characters.
    std::string bits() const {
        std::string out(size_, '0');
        for (size_t i = 0; i < size_; ++i) {
            if (negated(i)) out[i] = '1';
        }
        return out;
    }

    /// Canonical text form "axis:bits".
    std::string str() const {
        return axis_.name() + ":" + bits();
    }

    BitString with_axis(Axis axis) const {
        BitString out = *this;
        out.axis_ = std::move(axis);
        return out;
    }

    bool operator==(const BitString &) const = default;

    friend std::ostream &operator<<(std::ostream &out, const BitString &s) {
        return out << s.str();
    }

  private:
    friend BitString negate(const BitString &s);

    void clear_tail() {
        if (size_ % 64 != 0) words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
    }

    Axis axis_;
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Every symbol flipped.
inline BitString negate(const BitString &s) {
    BitString out = s;
    for (uint64_t &w : out.words_) w = ~w;
    out.clear_tail();
    return out;
}

/// Cyclic left rotation by k: {s_1 s_2 ... s_N} -> {s_2 ... s_N s_1} for k = 1.
/// k is reduced modulo the length and may be negative.
inline BitString zeta(const BitString &s, int64_t k) {
    const auto n = static_cast<int64_t>(s.size());
    int64_t shift = ((k % n) + n) % n;
    if (shift == 0) return s;
    BitString out(s.axis(), s.size());
    for (int64_t i = 0; i < n; ++i) {
        out.set(static_cast<size_t>(i), s.negated(static_cast<size_t>((i + shift) % n)));
    }
    return out;
}

/// Left rotation by k applied only to positions [begin, begin + length).
inline BitString zeta_span(const BitString &s, size_t begin, size_t length, int64_t k) {
    if (begin + length > s.size()) throw std::out_of_range("rotation span out of range");
    if (length == 0) return s;
    const auto n = static_cast<int64_t>(length);
    int64_t shift = ((k % n) + n) % n;
    if (shift == 0) return s;
    BitString out = s;
    for (int64_t i = 0; i < n; ++i) {
        out.set(begin + static_cast<size_t>(i), s.negated(begin + static_cast<size_t>((i + shift) % n)));
    }
    return out;
}

/// a || b.
inline BitString concat(const BitString &a, const BitString &b) {
    if (!(a.axis() == b.axis())) throw std::invalid_argument("cannot concatenate strings over different axes");
    BitString out(a.axis(), a.size() + b.size());
    for (size_t i = 0; i < a.size(); ++i) out.set(i, a.negated(i));
    for (size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.negated(i));
    return out;
}

/// The square-root-of-minus-one operator on a half string of even length L:
/// the last L/2 symbols followed by the negation of the first L/2.
/// Applying it twice negates every symbol.
inline BitString i_op(const BitString &half) {
    if (half.size() % 2 != 0) {
        throw std::invalid_argument("i_op needs an even-length string, got length " + std::to_string(half.size()));
    }
    const size_t q = half.size() / 2;
    BitString out(half.axis(), half.size());
    for (size_t i = 0; i < q; ++i) {
        out.set(i, half.negated(q + i));
        out.set(q + i, !half.negated(i));
    }
    return out;
}

/// Two-component form T_1 || T_2 of a string.
struct HalfPair {
    BitString top;
    BitString bottom;

    HalfPair(BitString t, BitString b) : top(std::move(t)), bottom(std::move(b)) {
        if (top.size() != bottom.size()) throw std::invalid_argument("half pair components differ in length");
        if (!(top.axis() == bottom.axis())) throw std::invalid_argument("half pair components differ in axis");
    }

    bool operator==(const HalfPair &) const = default;
};

inline HalfPair split(const BitString &s) {
    if (s.size() % 2 != 0) {
        throw std::invalid_argument("split needs an even-length string, got length " + std::to_string(s.size()));
    }
    const size_t h = s.size() / 2;
    return HalfPair(s.slice(0, h), s.slice(h, h));
}

inline BitString join(const HalfPair &p) {
    return concat(p.top, p.bottom);
}

/// T_a(n2, n1): N - n2 plain symbols then n2 negated ones, rotated left n1.
/// The rotation is stored reduced into [0, N).
class TString {
  public:
    TString(Axis axis, Resolution resolution, int64_t negated_count, int64_t rotation)
        : resolution_(resolution), negated_count_(negated_count), rotation_(0) {
        const auto n = static_cast<int64_t>(resolution.size());
        if (negated_count < 0 || negated_count > n) {
            throw ConstraintViolation("T-string negation count must lie in [0, " + std::to_string(n) + "], got " +
                                      std::to_string(negated_count));
        }
        rotation_ = ((rotation % n) + n) % n;
        BitString raw(std::move(axis), resolution.size());
        for (int64_t i = n - negated_count; i < n; ++i) raw.set(static_cast<size_t>(i), true);
        symbols_ = zeta(raw, rotation_);
    }

    const BitString &symbols() const {
        return symbols_;
    }
    Resolution resolution() const {
        return resolution_;
    }
    /// n2.
    int64_t negated_count() const {
        return negated_count_;
    }
    /// n1, in [0, N).
    int64_t rotation() const {
        return rotation_;
    }

    bool operator==(const TString &o) const {
        return symbols_ == o.symbols_;
    }

  private:
    Resolution resolution_;
    int64_t negated_count_;
    int64_t rotation_;
    BitString symbols_;
};

/// make_T(axis, n2, n1) at resolution N.
inline TString make_T(const Axis &axis, Resolution resolution, int64_t negated_count, int64_t rotation) {
    return TString(axis, resolution, negated_count, rotation);
}

/// Single-string equivalence up to a position permutation: the symbol counts
/// agree. Families of strings need a shared permutation; see
/// equal_mod_global_perm_family.
inline bool equal_mod_global_perm(const BitString &a, const BitString &b) {
    if (a.size() != b.size()) throw std::invalid_argument("strings differ in length");
    return a.count_negated() == b.count_negated();
}

}  // namespace bitsphere
