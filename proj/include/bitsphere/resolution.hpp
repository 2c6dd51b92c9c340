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
#include <cstdint>
#include <string>

#include "bitsphere/errors.hpp"

namespace bitsphere {

/// String length N = 2^M with M >= 2. Every full-length string, skeleton and
/// angle set is parameterised by one of these.
class Resolution {
  public:
    static constexpr uint32_t kMinExponent = 2;
    static constexpr uint32_t kMaxExponent = 30;

    explicit Resolution(uint64_t n) : exponent_(checked_exponent(n)) {
    }

    static Resolution from_exponent(uint32_t m) {
        if (m < kMinExponent || m > kMaxExponent) {
            throw ResolutionError("resolution exponent must lie in [2, 30], got " + std::to_string(m));
        }
        return Resolution(uint64_t{1} << m);
    }

    static bool is_valid(uint64_t n) {
        return n >= 4 && std::has_single_bit(n) && std::countr_zero(n) <= static_cast<int>(kMaxExponent);
    }

    uint64_t size() const {
        return uint64_t{1} << exponent_;
    }
    /// N/2, written N' in the Diophantine forms.
    uint64_t half() const {
        return size() >> 1;
    }
    uint64_t quarter() const {
        return size() >> 2;
    }
    uint32_t exponent() const {
        return exponent_;
    }

    bool operator==(const Resolution &) const = default;

  private:
    static uint32_t checked_exponent(uint64_t n) {
        if (!is_valid(n)) {
            throw ResolutionError("resolution must be a power of two in [4, 2^30], got " + std::to_string(n));
        }
        return static_cast<uint32_t>(std::countr_zero(n));
    }

    uint32_t exponent_;
};

}  // namespace bitsphere
