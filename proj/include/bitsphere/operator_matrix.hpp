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

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bitsphere/bitstring.hpp"

namespace bitsphere {

/// One entry of a 2x2 operator over {0, +1, -1, +i, -i}. Nonzero entries
/// are stored as a power of i, so +1, +i, -1, -i are powers 0, 1, 2, 3.
class UnitEntry {
  public:
    constexpr UnitEntry() = default;

    static constexpr UnitEntry zero() {
        return UnitEntry();
    }
    static constexpr UnitEntry power_of_i(int k) {
        UnitEntry e;
        e.nonzero_ = true;
        e.power_ = static_cast<uint8_t>(((k % 4) + 4) % 4);
        return e;
    }
    static constexpr UnitEntry one() {
        return power_of_i(0);
    }
    static constexpr UnitEntry i() {
        return power_of_i(1);
    }
    static constexpr UnitEntry minus_one() {
        return power_of_i(2);
    }
    static constexpr UnitEntry minus_i() {
        return power_of_i(3);
    }

    /// From Gaussian-integer components; only 0, +-1 and +-i are accepted.
    static UnitEntry from_components(int re, int im) {
        if (re == 0 && im == 0) return zero();
        if (re == 1 && im == 0) return one();
        if (re == 0 && im == 1) return i();
        if (re == -1 && im == 0) return minus_one();
        if (re == 0 && im == -1) return minus_i();
        throw std::invalid_argument("operator entries must be one of 0, +-1, +-i; got " + std::to_string(re) + "+" +
                                    std::to_string(im) + "i");
    }

    constexpr bool is_zero() const {
        return !nonzero_;
    }
    constexpr int power() const {
        return power_;
    }
    int real() const {
        if (!nonzero_) return 0;
        return power_ == 0 ? 1 : power_ == 2 ? -1 : 0;
    }
    int imag() const {
        if (!nonzero_) return 0;
        return power_ == 1 ? 1 : power_ == 3 ? -1 : 0;
    }

    friend constexpr UnitEntry operator*(UnitEntry a, UnitEntry b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return power_of_i(a.power_ + b.power_);
    }

    std::string str() const {
        static constexpr const char *kNames[] = {"1", "i", "-1", "-i"};
        return nonzero_ ? kNames[power_] : "0";
    }

    constexpr bool operator==(const UnitEntry &) const = default;

  private:
    bool nonzero_ = false;
    uint8_t power_ = 0;
};

/// Applies the unit i^k to a half string: identity, i_op, negate, or
/// negate(i_op).
inline BitString apply_unit(UnitEntry u, const BitString &s) {
    switch (u.power()) {
        case 0:
            return s;
        case 1:
            return i_op(s);
        case 2:
            return negate(s);
        default:
            return negate(i_op(s));
    }
}

/// 2x2 monomial matrix over {0, +-1, +-i}: exactly one nonzero entry per row
/// and per column, so its action on a HalfPair never has to add symbols.
class OperatorMatrix {
  public:
    using Grid = std::array<std::array<UnitEntry, 2>, 2>;

    explicit OperatorMatrix(const Grid &entries) : entries_(entries) {
        validate();
    }
    OperatorMatrix(UnitEntry a, UnitEntry b, UnitEntry c, UnitEntry d) : entries_{{{a, b}, {c, d}}} {
        validate();
    }

    static OperatorMatrix identity() {
        return {UnitEntry::one(), UnitEntry::zero(), UnitEntry::zero(), UnitEntry::one()};
    }
    static OperatorMatrix scalar(UnitEntry u) {
        return {u, UnitEntry::zero(), UnitEntry::zero(), u};
    }

    static bool admissible(const Grid &g) {
        bool diagonal = !g[0][0].is_zero() && !g[1][1].is_zero() && g[0][1].is_zero() && g[1][0].is_zero();
        bool anti = g[0][0].is_zero() && g[1][1].is_zero() && !g[0][1].is_zero() && !g[1][0].is_zero();
        return diagonal || anti;
    }

    const UnitEntry &at(int row, int col) const {
        return entries_[row][col];
    }
    const Grid &entries() const {
        return entries_;
    }
    /// Column holding the nonzero entry of the given row.
    int source_column(int row) const {
        return entries_[row][0].is_zero() ? 1 : 0;
    }

    OperatorMatrix operator-() const {
        return scalar(UnitEntry::minus_one()) * *this;
    }

    /// Ordinary matrix product; each output entry has at most one nonzero term.
    friend OperatorMatrix operator*(const OperatorMatrix &a, const OperatorMatrix &b) {
        Grid out{};
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                int re = 0;
                int im = 0;
                for (int k = 0; k < 2; ++k) {
                    UnitEntry t = a.entries_[r][k] * b.entries_[k][c];
                    re += t.real();
                    im += t.imag();
                }
                out[r][c] = UnitEntry::from_components(re, im);
            }
        }
        return OperatorMatrix(out);
    }

    std::string str() const {
        return "[[" + entries_[0][0].str() + "," + entries_[0][1].str() + "],[" + entries_[1][0].str() + "," +
               entries_[1][1].str() + "]]";
    }

    bool operator==(const OperatorMatrix &) const = default;

    friend std::ostream &operator<<(std::ostream &out, const OperatorMatrix &m) {
        return out << m.str();
    }

  private:
    void validate() const {
        if (!admissible(entries_)) {
            throw std::invalid_argument("operator matrix must have exactly one nonzero entry per row and column");
        }
    }

    Grid entries_;
};

inline OperatorMatrix compose(const OperatorMatrix &first, const OperatorMatrix &second) {
    return first * second;
}

/// Row r of the result is the selected half acted on by the row's unit.
inline HalfPair apply_matrix(const OperatorMatrix &m, const HalfPair &p) {
    const BitString *halves[2] = {&p.top, &p.bottom};
    BitString top = apply_unit(m.at(0, m.source_column(0)), *halves[m.source_column(0)]);
    BitString bottom = apply_unit(m.at(1, m.source_column(1)), *halves[m.source_column(1)]);
    return HalfPair(std::move(top), std::move(bottom));
}

namespace quaternion {

/// [[0, 1], [-1, 0]]
inline OperatorMatrix i1() {
    return {UnitEntry::zero(), UnitEntry::one(), UnitEntry::minus_one(), UnitEntry::zero()};
}
/// [[i, 0], [0, -i]]
inline OperatorMatrix i2() {
    return {UnitEntry::i(), UnitEntry::zero(), UnitEntry::zero(), UnitEntry::minus_i()};
}
/// [[0, -i], [-i, 0]]
inline OperatorMatrix i3() {
    return {UnitEntry::zero(), UnitEntry::minus_i(), UnitEntry::minus_i(), UnitEntry::zero()};
}

}  // namespace quaternion

enum class PauliAxis { x, y, z };

/// sigma_k = diag(i, i) * i_k, with k = 1, 2, 3 for x, y, z.
inline OperatorMatrix pauli(PauliAxis which) {
    const OperatorMatrix unit_i = OperatorMatrix::scalar(UnitEntry::i());
    switch (which) {
        case PauliAxis::x:
            return unit_i * quaternion::i1();
        case PauliAxis::y:
            return unit_i * quaternion::i2();
        default:
            return unit_i * quaternion::i3();
    }
}

}  // namespace bitsphere
