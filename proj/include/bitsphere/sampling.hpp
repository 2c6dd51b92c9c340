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
#include <cmath>
#include <cstdint>
#include <numbers>

namespace bitsphere {

using Vec3 = std::array<double, 3>;

/// splitmix64 finaliser. Sample i of a seeded run draws from
/// mix(seed, i, j) so results do not depend on evaluation order.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Uniform double in [0, 1) for (seed, sample, stream).
inline double unit_uniform(uint64_t seed, uint64_t sample, uint64_t stream) {
    uint64_t h = splitmix64(seed ^ splitmix64(sample * 4 + stream));
    return static_cast<double>(h >> 11) * 0x1p-53;
}

/// Uniform-area point on the unit sphere: z uniform in [-1, 1), azimuth
/// uniform in [0, 2 pi).
inline Vec3 sphere_point(uint64_t seed, uint64_t sample) {
    double z = 2.0 * unit_uniform(seed, sample, 0) - 1.0;
    double phi = 2.0 * std::numbers::pi * unit_uniform(seed, sample, 1);
    double rho = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    return {rho * std::cos(phi), rho * std::sin(phi), z};
}

inline double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace bitsphere
