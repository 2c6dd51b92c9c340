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
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bitsphere/bitstring.hpp"
#include "bitsphere/dyadic.hpp"
#include "bitsphere/errors.hpp"

namespace bitsphere {

/// Joint symbol counts of two equal-length strings and their correlation
/// (count_same - count_diff)/N under a = +1, a-bar = -1.
struct CorrelationTable {
    int64_t plain_plain = 0;  // (a, b)
    int64_t plain_neg = 0;    // (a, b-bar)
    int64_t neg_plain = 0;    // (a-bar, b)
    int64_t neg_neg = 0;      // (a-bar, b-bar)
    DyadicRational expectation;

    int64_t total() const {
        return plain_plain + plain_neg + neg_plain + neg_neg;
    }
    bool operator==(const CorrelationTable &) const = default;
};

inline CorrelationTable correlate(const BitString &a, const BitString &b) {
    if (a.size() != b.size()) throw std::invalid_argument("correlated strings differ in length");
    if (!std::has_single_bit(a.size())) throw std::invalid_argument("correlation needs a power-of-two length");
    CorrelationTable t;
    for (size_t i = 0; i < a.size(); ++i) {
        const bool x = a.negated(i);
        const bool y = b.negated(i);
        if (!x && !y) ++t.plain_plain;
        if (!x && y) ++t.plain_neg;
        if (x && !y) ++t.neg_plain;
        if (x && y) ++t.neg_neg;
    }
    const int64_t same = t.plain_plain + t.neg_neg;
    const int64_t diff = t.plain_neg + t.neg_plain;
    t.expectation = DyadicRational(same - diff, static_cast<uint32_t>(std::countr_zero(a.size())));
    return t;
}

namespace detail {

inline int64_t reduce_mod(int64_t k, int64_t span) {
    if (span <= 0) return 0;
    return ((k % span) + span) % span;
}

inline void require_block(int64_t length, const std::string &name) {
    if (length < 0) {
        throw ConstraintViolation("block " + name + " has negative length " + std::to_string(length));
    }
}

}  // namespace detail

/// T_ab(m1, m2, m3; n1, n2, n3): two correlated strings
///   ta = a^(N-m1) a-bar^(m1)
///   tb = b^(N-m2) b-bar^(m2-m1) | b-bar^(m3) b^(m1-m3)
/// with zeta3 rotating both strings inside the last m1 positions, zeta2
/// inside the first N - m1 and zeta1 over the whole string, in that order.
class ProductState2 {
  public:
    Resolution resolution() const {
        return resolution_;
    }
    const BitString &ta() const {
        return ta_;
    }
    const BitString &tb() const {
        return tb_;
    }
    std::array<int64_t, 3> m() const {
        return {m1_, m2_, m3_};
    }
    /// Phase exponents reduced modulo their spans (N, N - m1, m1).
    std::array<int64_t, 3> n() const {
        return {n1_, n2_, n3_};
    }

    bool operator==(const ProductState2 &o) const {
        return ta_ == o.ta_ && tb_ == o.tb_;
    }

  private:
    friend ProductState2 make_product2(Resolution, int64_t, int64_t, int64_t, int64_t, int64_t, int64_t, const Axis &,
                                       const Axis &);

    ProductState2(Resolution r) : resolution_(r) {
    }

    Resolution resolution_;
    int64_t m1_ = 0, m2_ = 0, m3_ = 0;
    int64_t n1_ = 0, n2_ = 0, n3_ = 0;
    BitString ta_;
    BitString tb_;
};

inline ProductState2 make_product2(Resolution r, int64_t m1, int64_t m2, int64_t m3, int64_t n1 = 0, int64_t n2 = 0,
                                   int64_t n3 = 0, const Axis &axis_a = Axis("a"), const Axis &axis_b = Axis("b")) {
    const auto size = static_cast<int64_t>(r.size());
    detail::require_block(m1, "m1");
    detail::require_block(size - m1, "N-m1");
    detail::require_block(size - m2, "N-m2");
    detail::require_block(m2 - m1, "m2-m1");
    detail::require_block(m3, "m3");
    detail::require_block(m1 - m3, "m1-m3");

    ProductState2 s(r);
    s.m1_ = m1;
    s.m2_ = m2;
    s.m3_ = m3;
    s.n1_ = detail::reduce_mod(n1, size);
    s.n2_ = detail::reduce_mod(n2, size - m1);
    s.n3_ = detail::reduce_mod(n3, m1);

    BitString ta(axis_a, r.size());
    BitString tb(axis_b, r.size());
    for (int64_t i = size - m1; i < size; ++i) ta.set(static_cast<size_t>(i), true);
    for (int64_t i = size - m2; i < size - m1 + m3; ++i) tb.set(static_cast<size_t>(i), true);

    const auto lo = static_cast<size_t>(size - m1);
    ta = zeta_span(ta, lo, static_cast<size_t>(m1), s.n3_);
    tb = zeta_span(tb, lo, static_cast<size_t>(m1), s.n3_);
    ta = zeta_span(ta, 0, lo, s.n2_);
    tb = zeta_span(tb, 0, lo, s.n2_);
    s.ta_ = zeta(ta, s.n1_);
    s.tb_ = zeta(tb, s.n1_);
    return s;
}

/// Phase permutations act on the parameters, so zeta2 and zeta3 always
/// rotate within the block layout before the global zeta1 rotation.
inline ProductState2 zeta1(const ProductState2 &s, int64_t k) {
    auto [m1, m2, m3] = s.m();
    auto [n1, n2, n3] = s.n();
    return make_product2(s.resolution(), m1, m2, m3, n1 + k, n2, n3, s.ta().axis(), s.tb().axis());
}
inline ProductState2 zeta2(const ProductState2 &s, int64_t k) {
    auto [m1, m2, m3] = s.m();
    auto [n1, n2, n3] = s.n();
    return make_product2(s.resolution(), m1, m2, m3, n1, n2 + k, n3, s.ta().axis(), s.tb().axis());
}
inline ProductState2 zeta3(const ProductState2 &s, int64_t k) {
    auto [m1, m2, m3] = s.m();
    auto [n1, n2, n3] = s.n();
    return make_product2(s.resolution(), m1, m2, m3, n1, n2, n3 + k, s.ta().axis(), s.tb().axis());
}

inline CorrelationTable correlation(const ProductState2 &s) {
    return correlate(s.ta(), s.tb());
}

/// T_a(N/2, 0) x zeta^(N/2 - m) T_b(N/2, 0), i.e. make_product2(N/2, N - m, m).
/// m = 0 is perfectly anti-correlated and m = N/2 perfectly correlated.
inline ProductState2 bell_state(Resolution r, int64_t m) {
    const auto half = static_cast<int64_t>(r.half());
    if (m < 0 || m > half) {
        throw ConstraintViolation("Bell-state m must lie in [0, " + std::to_string(half) + "], got " +
                                  std::to_string(m));
    }
    return make_product2(r, half, static_cast<int64_t>(r.size()) - m, m);
}

/// How a Bell-state parameter m maps to the detectors' relative angle.
/// paper: cos(theta) = 1 - 2m/N. counting: cos(theta) = 1 - 4m/N, which makes
/// the counted correlation (4m - N)/N equal -cos(theta).
enum class AngleConvention { paper, counting };

inline const char *to_string(AngleConvention c) {
    return c == AngleConvention::paper ? "paper" : "counting";
}

inline AngleConvention parse_convention(const std::string &s) {
    if (s == "paper") return AngleConvention::paper;
    if (s == "counting") return AngleConvention::counting;
    throw std::invalid_argument("angle convention must be 'paper' or 'counting', got '" + s + "'");
}

inline DyadicRational bell_cos_theta(Resolution r, int64_t m, AngleConvention conv) {
    const uint32_t k = r.exponent();
    return conv == AngleConvention::paper ? DyadicRational(1) - DyadicRational(2 * m, k)
                                          : DyadicRational(1) - DyadicRational(4 * m, k);
}

/// The m in [0, N/2] whose convention cosine is nearest cos(theta); ties go
/// to the smaller m.
inline int64_t bell_m_for_angle(Resolution r, double theta, AngleConvention conv) {
    const auto half = static_cast<int64_t>(r.half());
    const double target = std::cos(theta);
    const double per_m = (conv == AngleConvention::paper ? 2.0 : 4.0) / static_cast<double>(r.size());
    const double ideal = (1.0 - target) / per_m;
    int64_t best = 0;
    double best_gap = std::numeric_limits<double>::infinity();
    const auto base = static_cast<int64_t>(std::floor(ideal));
    for (int64_t cand = base - 1; cand <= base + 2; ++cand) {
        const int64_t m = std::clamp<int64_t>(cand, 0, half);
        const double gap = std::fabs(bell_cos_theta(r, m, conv).to_double() - target);
        if (gap < best_gap || (gap == best_gap && m < best)) {
            best_gap = gap;
            best = m;
        }
    }
    return best;
}

/// J correlated strings built from a binary block-refinement tree.
///
/// Node layout (pre-order, 2^J - 1 nodes): the node at depth d owns a block of
/// positions over which strings 0..d-1 are constant. Its m parameter is the
/// number of negated symbols of string d inside the block; those symbols are
/// placed last, so the block splits into a plain child followed by a negated
/// child, which are visited in that order. Its n parameter co-rotates every
/// string left within the block. Rotations are applied deepest level first.
class ProductStateJ {
  public:
    Resolution resolution() const {
        return resolution_;
    }
    int depth() const {
        return static_cast<int>(strings_.size());
    }
    const std::vector<BitString> &strings() const {
        return strings_;
    }
    const std::vector<int64_t> &m_params() const {
        return m_params_;
    }
    /// Rotation exponents reduced modulo their block lengths.
    const std::vector<int64_t> &n_params() const {
        return n_params_;
    }
    size_t parameter_count() const {
        return m_params_.size() + n_params_.size();
    }
    /// Lengths of the 2^J blocks on which all J strings are constant, in
    /// tree order.
    const std::vector<int64_t> &leaf_blocks() const {
        return leaf_blocks_;
    }
    /// Smallest non-empty leaf block; 0 when every leaf is empty (cannot
    /// happen since the leaves partition N positions).
    int64_t min_leaf_block() const {
        int64_t best = 0;
        for (int64_t b : leaf_blocks_) {
            if (b > 0 && (best == 0 || b < best)) best = b;
        }
        return best;
    }
    /// Relative sampling error of a correlation estimated on the smallest
    /// block, ~ 1/sqrt(block size). Grows as J approaches log2 N.
    double correlation_sampling_error() const {
        return 1.0 / std::sqrt(static_cast<double>(min_leaf_block()));
    }

    bool operator==(const ProductStateJ &o) const {
        return strings_ == o.strings_;
    }

  private:
    friend ProductStateJ make_productJ(Resolution, int, std::span<const int64_t>, std::span<const int64_t>,
                                       std::span<const Axis>);

    ProductStateJ(Resolution r) : resolution_(r) {
    }

    Resolution resolution_;
    std::vector<BitString> strings_;
    std::vector<int64_t> m_params_;
    std::vector<int64_t> n_params_;
    std::vector<int64_t> leaf_blocks_;
};

/// Default alphabet names a, b, c, ... for a J-string state.
inline std::vector<Axis> default_axes(int j) {
    std::vector<Axis> out;
    for (int i = 0; i < j; ++i) {
        out.emplace_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
    }
    return out;
}

inline ProductStateJ make_productJ(Resolution r, int j, std::span<const int64_t> m_params,
                                   std::span<const int64_t> n_params, std::span<const Axis> axes = {}) {
    if (j < 1) throw ConstraintViolation("a product state needs at least one string");
    if (static_cast<uint32_t>(j) > r.exponent()) {
        throw EntanglementCapError("at most log2 N = " + std::to_string(r.exponent()) +
                                   " strings can be correlated at N = " + std::to_string(r.size()) + ", asked for " +
                                   std::to_string(j));
    }
    const size_t nodes = (size_t{1} << j) - 1;
    if (m_params.size() != nodes || n_params.size() != nodes) {
        throw std::invalid_argument("J = " + std::to_string(j) + " needs " + std::to_string(nodes) +
                                    " m and n parameters each");
    }
    std::vector<Axis> names = axes.empty() ? default_axes(j) : std::vector<Axis>(axes.begin(), axes.end());
    if (names.size() != static_cast<size_t>(j)) throw std::invalid_argument("one axis label per string required");

    ProductStateJ s(r);
    for (const Axis &a : names) s.strings_.emplace_back(a, r.size());
    s.m_params_.assign(m_params.begin(), m_params.end());
    s.n_params_.resize(nodes);

    struct Rotation {
        int level;
        size_t begin;
        size_t length;
        int64_t shift;
    };
    std::vector<Rotation> rotations;
    size_t next = 0;

    auto build = [&](auto &&self, int level, size_t begin, size_t length) -> void {
        const size_t node = next++;
        const int64_t neg = m_params[node];
        if (neg < 0 || static_cast<size_t>(neg) > length) {
            throw ConstraintViolation("node " + std::to_string(node) + " (depth " + std::to_string(level) +
                                      ") asks for " + std::to_string(neg) + " negated symbols in a block of " +
                                      std::to_string(length));
        }
        const size_t plain = length - static_cast<size_t>(neg);
        for (size_t i = begin + plain; i < begin + length; ++i) s.strings_[static_cast<size_t>(level)].set(i, true);
        s.n_params_[node] = detail::reduce_mod(n_params[node], static_cast<int64_t>(length));
        rotations.push_back({level, begin, length, s.n_params_[node]});
        if (level + 1 < j) {
            self(self, level + 1, begin, plain);
            self(self, level + 1, begin + plain, static_cast<size_t>(neg));
        } else {
            s.leaf_blocks_.push_back(static_cast<int64_t>(plain));
            s.leaf_blocks_.push_back(neg);
        }
    };
    build(build, 0, 0, r.size());

    std::stable_sort(rotations.begin(), rotations.end(),
                     [](const Rotation &a, const Rotation &b) { return a.level > b.level; });
    for (const Rotation &rot : rotations) {
        if (rot.shift == 0) continue;
        for (BitString &str : s.strings_) str = zeta_span(str, rot.begin, rot.length, rot.shift);
    }
    return s;
}

/// Every node negates half of its block: the all-balanced parameter choice.
inline std::vector<int64_t> balanced_m_params(Resolution r, int j) {
    std::vector<int64_t> out;
    auto walk = [&](auto &&self, int level, int64_t length) -> void {
        const int64_t neg = length / 2;
        out.push_back(neg);
        if (level + 1 < j) {
            self(self, level + 1, length - neg);
            self(self, level + 1, neg);
        }
    };
    if (j >= 1) walk(walk, 0, static_cast<int64_t>(r.size()));
    return out;
}

/// T_abc(m1..m7; n1..n7) with the three-string block layout
///   a: a^(N-m1) | a-bar^(m1)
///   b: b^(N-m2) b-bar^(m2-m1) | b-bar^(m3) b^(m1-m3)
///   c: c^(N-m4) c-bar^(m4-m2) | c^(m2-m5) c-bar^(m5-m1) | c^(m6) c-bar^(m3-m6) | c^(m7) c-bar^(m1-m3-m7)
/// where n1 rotates the whole string, n2 and n3 the a- and a-bar blocks, and
/// n4..n7 the four c-blocks in the order written. Stored parameters use the
/// ProductStateJ tree layout.
inline ProductStateJ make_product3(Resolution r, const std::array<int64_t, 7> &m, const std::array<int64_t, 7> &n) {
    const auto size = static_cast<int64_t>(r.size());
    const auto [m1, m2, m3, m4, m5, m6, m7] = m;
    const auto [n1, n2, n3, n4, n5, n6, n7] = n;
    const std::array<std::pair<int64_t, const char *>, 14> blocks{{{size - m1, "N-m1"},
                                                                   {m1, "m1"},
                                                                   {size - m2, "N-m2"},
                                                                   {m2 - m1, "m2-m1"},
                                                                   {m3, "m3"},
                                                                   {m1 - m3, "m1-m3"},
                                                                   {size - m4, "N-m4"},
                                                                   {m4 - m2, "m4-m2"},
                                                                   {m2 - m5, "m2-m5"},
                                                                   {m5 - m1, "m5-m1"},
                                                                   {m6, "m6"},
                                                                   {m3 - m6, "m3-m6"},
                                                                   {m7, "m7"},
                                                                   {m1 - m3 - m7, "m1-m3-m7"}}};
    for (const auto &[len, name] : blocks) detail::require_block(len, name);
    if (r.exponent() < 3) {
        throw EntanglementCapError("three correlated strings need N >= 8, got N = " + std::to_string(size));
    }

    // Tree nodes in pre-order: root, a-block, (a,b), (a,b-bar), a-bar-block,
    // (a-bar,b), (a-bar,b-bar). The a-bar block holds b-bar before b, which is
    // the plain-first layout rotated left by m1 - m3.
    const std::array<int64_t, 7> tree_m{m1, m2 - m1, m4 - m2, m5 - m1, m3, m1 - m3 - m7, m3 - m6};
    const std::array<int64_t, 7> tree_n{n1, n2, n4, n5, n3 + (m1 - m3), n7, n6};
    return make_productJ(r, 3, tree_m, tree_n);
}

/// The two-string state in ProductStateJ tree layout.
inline ProductStateJ as_family(const ProductState2 &s) {
    auto [m1, m2, m3] = s.m();
    auto [n1, n2, n3] = s.n();
    const std::array<int64_t, 3> tree_m{m1, m2 - m1, m3};
    const std::array<int64_t, 3> tree_n{n1, n2, n3 + (m1 - m3)};
    const std::array<Axis, 2> axes{s.ta().axis(), s.tb().axis()};
    return make_productJ(s.resolution(), 2, tree_m, tree_n, axes);
}

/// Correlation between strings i and k of a family.
inline CorrelationTable pair_correlation(const ProductStateJ &s, size_t i, size_t k) {
    return correlate(s.strings().at(i), s.strings().at(k));
}

/// True iff one position permutation maps every string of a onto the
/// corresponding string of b, i.e. the per-position J-tuples agree as
/// multisets.
inline bool equal_mod_global_perm_family(const ProductStateJ &a, const ProductStateJ &b) {
    if (a.depth() != b.depth() || !(a.resolution() == b.resolution())) {
        throw std::invalid_argument("families differ in string count or length");
    }
    if (a.depth() > 64) throw std::invalid_argument("families deeper than 64 strings are not supported");
    auto tuples = [](const ProductStateJ &s) {
        std::vector<uint64_t> out(s.resolution().size(), 0);
        for (size_t k = 0; k < s.strings().size(); ++k) {
            for (size_t i = 0; i < out.size(); ++i) {
                if (s.strings()[k].negated(i)) out[i] |= uint64_t{1} << k;
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return tuples(a) == tuples(b);
}

}  // namespace bitsphere
