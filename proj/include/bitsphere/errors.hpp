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

#include <stdexcept>
#include <string>

namespace bitsphere {

/// Raised when a string length or resolution is not a power of two >= 4.
class ResolutionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the range its definition allows.
class ConstraintViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A spherical triangle has a vertex at a pole (some cosine is +-1).
class DegenerateTriangleError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// More correlated strings were requested than the string length supports.
class EntanglementCapError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Exact arithmetic left the representable range.
class ArithmeticOverflow : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

}  // namespace bitsphere
