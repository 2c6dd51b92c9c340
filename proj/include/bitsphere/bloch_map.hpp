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
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bitsphere/angle_sets.hpp"
#include "bitsphere/bitstring.hpp"
#include "bitsphere/dyadic.hpp"
#include "bitsphere/sampling.hpp"

namespace bitsphere {

/// Which pole a colatitude/longitude frame is centred on.
enum class Frame { x, y, z };

inline const char *to_string(Frame f) {
    switch (f) {
        case Frame::x:
            return "x";
        case Frame::y:
            return "y";
        default:
            return "z";
    }
}

inline Axis axis_of(Frame f) {
    return Axis(to_string(f));
}

inline Frame parse_frame(const std::string &s) {
    if (s == "x") return Frame::x;
    if (s == "y") return Frame::y;
    if (s == "z") return Frame::z;
    throw std::invalid_argument("frame must be x, y or z, got '" + s + "'");
}

/// Orthonormal (pole, phi = 0 direction, phi = pi/2 direction) of a frame.
/// C_x puts p_y at phi = 0 and p_z at phi = pi/2; C_y and C_z follow the
/// cyclic order.
struct FrameBasis {
    Vec3 pole;
    Vec3 zero_azimuth;
    Vec3 quarter_azimuth;
};

inline FrameBasis frame_basis(Frame f) {
    switch (f) {
        case Frame::x:
            return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        case Frame::y:
            return {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
        default:
            return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    }
}

/// A legal point of skeleton F_axis: cos^2(theta/2) = 1 - (2m - 1)/N and
/// phi/2pi = n/N, with 1 <= m <= N/2 and 1 <= n <= N.
class SkeletonPoint {
  public:
    SkeletonPoint(Frame axis, Resolution resolution, int64_t m, int64_t n)
        : axis_(axis), resolution_(resolution), m_(m), n_(n) {
        const auto half = static_cast<int64_t>(resolution.half());
        const auto size = static_cast<int64_t>(resolution.size());
        if (m < 1 || m > half) {
            throw ConstraintViolation("skeleton m must lie in [1, " + std::to_string(half) + "], got " +
                                      std::to_string(m));
        }
        if (n < 1 || n > size) {
            throw ConstraintViolation("skeleton n must lie in [1, " + std::to_string(size) + "], got " +
                                      std::to_string(n));
        }
    }

    Frame axis() const {
        return axis_;
    }
    Resolution resolution() const {
        return resolution_;
    }
    int64_t m() const {
        return m_;
    }
    int64_t n() const {
        return n_;
    }

    DyadicRational up_fraction() const {
        return DyadicRational(static_cast<int64_t>(resolution_.size()) - (2 * m_ - 1), resolution_.exponent());
    }
    DyadicRational cos_theta() const {
        return x2_value(resolution_, m_);
    }
    DyadicRational phi_turns() const {
        return x1_value(resolution_, n_);
    }

    /// Unit vector of the point in the global (x, y, z) basis.
    Vec3 direction() const {
        const FrameBasis b = frame_basis(axis_);
        const double c = cos_theta().to_double();
        const double s = std::sqrt(1.0 - c * c);
        const double phi = 2.0 * std::numbers::pi * phi_turns().to_double();
        Vec3 out{};
        for (int i = 0; i < 3; ++i) {
            out[i] = c * b.pole[i] + s * (std::cos(phi) * b.zero_azimuth[i] + std::sin(phi) * b.quarter_azimuth[i]);
        }
        return out;
    }

    bool operator==(const SkeletonPoint &) const = default;

  private:
    Frame axis_;
    Resolution resolution_;
    int64_t m_;
    int64_t n_;
};

/// S_axis(theta, phi) = T(2m - 1, n) over the frame's alphabet.
inline TString bitstring_for_point(const SkeletonPoint &p) {
    return make_T(axis_of(p.axis()), p.resolution(), 2 * p.m() - 1, p.n());
}

/// Mean and variance of a string under a = +1, a-bar = -1.
struct PointStats {
    DyadicRational mean;
    DyadicRational variance;
    DyadicRational up_fraction;
};

inline PointStats stats(const BitString &s) {
    if (!std::has_single_bit(s.size())) throw std::invalid_argument("stats need a power-of-two string length");
    const auto k = static_cast<uint32_t>(std::countr_zero(s.size()));
    const auto plain = static_cast<int64_t>(s.count_plain());
    const auto neg = static_cast<int64_t>(s.count_negated());
    PointStats out;
    out.mean = DyadicRational(plain - neg, k);
    out.variance = DyadicRational(1) - out.mean * out.mean;
    out.up_fraction = DyadicRational(plain, k);
    return out;
}

inline PointStats stats(const TString &t) {
    return stats(t.symbols());
}

/// cos(theta/2)|+> + e^{i phi} sin(theta/2)|->, in floating point.
struct HilbertApprox {
    std::complex<double> amp0;
    std::complex<double> amp1;

    double norm_squared() const {
        return std::norm(amp0) + std::norm(amp1);
    }
};

inline HilbertApprox to_hilbert(const SkeletonPoint &p) {
    const double up = p.up_fraction().to_double();
    const double phase = 2.0 * std::numbers::pi * p.phi_turns().to_double();
    return {std::complex<double>(std::sqrt(up), 0.0), std::polar(std::sqrt(1.0 - up), phase)};
}

}  // namespace bitsphere
