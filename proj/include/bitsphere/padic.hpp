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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitsphere/dyadic.hpp"
#include "bitsphere/resolution.hpp"

namespace bitsphere {

/// A finite N-adic address: base-N digits, most significant first. Each
/// digit picks one of the N sub-trajectories at the next level of the helix.
class PadicLabel {
  public:
    PadicLabel(Resolution base, std::vector<uint32_t> digits) : base_(base), digits_(std::move(digits)) {
        for (uint32_t d : digits_) {
            if (d >= base_.size()) {
                throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                            std::to_string(base_.size()));
            }
        }
    }

    Resolution base() const {
        return base_;
    }
    const std::vector<uint32_t> &digits() const {
        return digits_;
    }

    bool operator==(const PadicLabel &) const = default;

  private:
    Resolution base_;
    std::vector<uint32_t> digits_;
};

/// N^(-k) where k is the length of the common leading-digit prefix; 0 for
/// identical labels.
inline DyadicRational padic_distance(const PadicLabel &x, const PadicLabel &y) {
    if (!(x.base() == y.base())) throw std::invalid_argument("p-adic labels use different bases");
    if (x.digits().size() != y.digits().size()) throw std::invalid_argument("p-adic labels differ in depth");
    size_t k = 0;
    while (k < x.digits().size() && x.digits()[k] == y.digits()[k]) ++k;
    if (k == x.digits().size()) return DyadicRational(0);
    return DyadicRational(1, static_cast<uint32_t>(k) * x.base().exponent());
}

}  // namespace bitsphere
