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
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bitsphere/angle_sets.hpp"
#include "bitsphere/niven.hpp"
#include "bitsphere/report.hpp"

// Exhaustive finite-N checks of the disjointness and no-orthogonal-triple
// theorems. Each proof reduces to "this integer equation has no solution with
// odd offsets 2m - 1 - N'"; the searches below enumerate every offset pair and
// count solutions exactly in 128-bit integers.

namespace bitsphere {

/// Largest resolution exponent the O(N^2) searches accept.
inline constexpr uint32_t kMaxVerificationExponent = 16;

struct PairSearchResult {
    uint64_t search_space_size = 0;
    uint64_t solutions = 0;
    std::vector<std::pair<int64_t, int64_t>> witnesses;
    /// Smallest |lhs - rhs| seen; 0 iff a solution exists.
    __int128 min_abs_residual = 0;
};

/// Counts pairs (u, v) from the two value lists with residual(u, v) == 0.
template <typename Residual>
PairSearchResult search_pairs(std::span<const int64_t> us, std::span<const int64_t> vs, Residual &&residual,
                              size_t max_witnesses = 8) {
    PairSearchResult out;
    bool first = true;
    for (int64_t u : us) {
        for (int64_t v : vs) {
            __int128 r = residual(static_cast<__int128>(u), static_cast<__int128>(v));
            __int128 a = r < 0 ? -r : r;
            if (first || a < out.min_abs_residual) out.min_abs_residual = a;
            first = false;
            ++out.search_space_size;
            if (r == 0) {
                ++out.solutions;
                if (out.witnesses.size() < max_witnesses) out.witnesses.emplace_back(u, v);
            }
        }
    }
    return out;
}

/// coef_u * u^2 + coef_v * v^2 == rhs over the given offsets.
inline PairSearchResult search_weighted_squares(std::span<const int64_t> us, std::span<const int64_t> vs,
                                                int64_t coef_u, int64_t coef_v, int64_t rhs) {
    return search_pairs(us, vs, [&](__int128 u, __int128 v) { return coef_u * u * u + coef_v * v * v - rhs; });
}

/// The offsets 2m - 1 - N' for m = 1..N'.
inline std::vector<int64_t> x2_offsets(Resolution r) {
    std::vector<int64_t> out;
    out.reserve(r.half());
    for (int64_t m = 1; m <= static_cast<int64_t>(r.half()); ++m) out.push_back(x2_offset(r, m));
    return out;
}

namespace detail {

inline void require_verification_size(Resolution r) {
    if (r.exponent() > kMaxVerificationExponent) {
        throw ResolutionError("verification searches accept N up to 2^" + std::to_string(kMaxVerificationExponent));
    }
}

// Offsets are (2m - 1 - N'), so index m = (offset + N' + 1) / 2.
inline std::vector<std::pair<int64_t, int64_t>> offsets_to_indices(Resolution r,
                                                                   const std::vector<std::pair<int64_t, int64_t>> &w) {
    std::vector<std::pair<int64_t, int64_t>> out;
    const auto h = static_cast<int64_t>(r.half());
    for (auto [u, v] : w) out.emplace_back((u + h + 1) / 2, (v + h + 1) / 2);
    return out;
}

inline SubCheck weighted_square_check(Resolution r, const std::string &name, int64_t coef_u, int64_t coef_v) {
    auto offs = x2_offsets(r);
    const auto h = static_cast<int64_t>(r.half());
    PairSearchResult res = search_weighted_squares(offs, offs, coef_u, coef_v, h * h);
    SubCheck c;
    c.name = name;
    c.search_space_size = res.search_space_size;
    c.solutions_found = res.solutions;
    c.witnesses = offsets_to_indices(r, res.witnesses);
    c.note = std::to_string(coef_u) + "(2m-1-N')^2 + " + std::to_string(coef_v) + "(2m'-1-N')^2 = N'^2";
    return c;
}

// An X1 angle phi = 2 pi n / N in (0, pi) coincides with an X2 (or X3) angle
// only if cos(phi) (or sin(phi)) is rational and equals an X2 value. Niven's
// lemma decides rationality exactly; rational cases are compared exactly.
inline SubCheck x1_overlap_check(Resolution r, bool against_sine) {
    SubCheck c;
    c.name = against_sine ? "X1_X3" : "X1_X2";
    const auto size = static_cast<int64_t>(r.size());
    const auto half = static_cast<int64_t>(r.half());
    std::vector<Rational> x2_values;
    for (int64_t m = 1; m <= half; ++m) x2_values.push_back(x2_value(r, m).to_rational());
    uint64_t rational_cases = 0;
    for (int64_t n = 1; n <= size; ++n) {
        c.search_space_size += static_cast<uint64_t>(half);
        if (2 * n >= size) continue;  // phi outside (0, pi) cannot be a colatitude
        Rational turns(n, size);
        auto value = against_sine ? rational_sin_of_turns(turns) : rational_cos_of_turns(turns);
        if (!value) continue;
        ++rational_cases;
        for (int64_t m = 1; m <= half; ++m) {
            if (x2_values[static_cast<size_t>(m - 1)] == *value) {
                ++c.solutions_found;
                if (c.witnesses.size() < 8) c.witnesses.emplace_back(n, m);
            }
        }
    }
    c.note = std::to_string(rational_cases) + " X1 angles in (0, pi) have a rational " +
             (against_sine ? "sine" : "cosine") + " (Niven exceptions); none may equal an X2 value";
    return c;
}

inline SubCheck zero_cosine_check(Resolution r) {
    SubCheck c;
    c.name = "zero_not_in_X2";
    for (int64_t m = 1; m <= static_cast<int64_t>(r.half()); ++m) {
        ++c.search_space_size;
        if (x2_value(r, m).is_zero()) {
            ++c.solutions_found;
            c.witnesses.emplace_back(m, 0);
        }
    }
    c.note = "cos(theta) = 0 must not occur in X2";
    return c;
}

// For phi in X1, cos(2 phi) is rational only at multiples of pi/4; any other
// rational case would open a branch of the case analysis the searches do not
// cover, so it is counted as a solution.
inline SubCheck azimuth_class_check(Resolution r) {
    SubCheck c;
    c.name = "rational_cos_2phi_only_at_eighth_turns";
    const auto size = static_cast<int64_t>(r.size());
    uint64_t eighth_turns = 0;
    for (int64_t n = 1; n <= size; ++n) {
        ++c.search_space_size;
        Rational double_turns(2 * n, size);
        if (!rational_cos_of_turns(double_turns)) continue;
        if ((8 * n) % size == 0) {
            ++eighth_turns;
        } else {
            ++c.solutions_found;
            if (c.witnesses.size() < 8) c.witnesses.emplace_back(n, 0);
        }
    }
    c.note = std::to_string(eighth_turns) + " azimuths with rational cos(2 phi), all multiples of pi/4";
    return c;
}

}  // namespace detail

/// X1, X2 and X3 are mutually disjoint at resolution N.
inline VerificationReport verify_sets_disjoint(Resolution r) {
    detail::require_verification_size(r);
    Stopwatch clock;
    VerificationReport rep;
    rep.theorem = "sets_disjoint";
    rep.n = r.size();
    rep.add(detail::x1_overlap_check(r, false));
    rep.add(detail::x1_overlap_check(r, true));
    rep.add(detail::weighted_square_check(r, "X2_X3", 1, 1));
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

/// The skeletons F_x, F_y, F_z are pairwise disjoint at resolution N.
inline VerificationReport verify_skeleton_disjoint(Resolution r) {
    detail::require_verification_size(r);
    Stopwatch clock;
    VerificationReport rep;
    rep.theorem = "skeletons_disjoint";
    rep.n = r.size();
    rep.add(detail::azimuth_class_check(r));
    rep.add(detail::zero_cosine_check(r));
    rep.add(detail::weighted_square_check(r, "quarter_turn_X2_X3", 1, 1));
    rep.add(detail::weighted_square_check(r, "eighth_turn", 2, 1));
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

/// No three mutually orthogonal points lie on one skeleton at resolution N.
inline VerificationReport verify_no_orthonormal_triples(Resolution r) {
    detail::require_verification_size(r);
    Stopwatch clock;
    VerificationReport rep;
    rep.theorem = "no_orthonormal_triples";
    rep.n = r.size();
    rep.add(detail::azimuth_class_check(r));
    rep.add(detail::weighted_square_check(r, "phi_0_X2_X3", 1, 1));
    rep.add(detail::zero_cosine_check(r));

    // phi = pi/4: c1^2 c2^2 + c1^2 + c2^2 = 1 with c = -u/N', i.e.
    // u^2 v^2 + N'^2 u^2 + N'^2 v^2 = N'^4.
    auto offs = x2_offsets(r);
    const __int128 h = static_cast<__int128>(r.half());
    const __int128 h2 = h * h;
    PairSearchResult res =
        search_pairs(offs, offs, [&](__int128 u, __int128 v) { return u * u * v * v + h2 * u * u + h2 * v * v - h2 * h2; });
    SubCheck c;
    c.name = "phi_pi_over_4";
    c.search_space_size = res.search_space_size;
    c.solutions_found = res.solutions;
    c.witnesses = detail::offsets_to_indices(r, res.witnesses);
    c.note = "cos^2 t1 cos^2 t2 + cos^2 t1 + cos^2 t2 = 1 over X2 pairs";
    rep.add(std::move(c));
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

}  // namespace bitsphere
