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

#include "bitsphere/admissibility.hpp"
#include "bitsphere/angle_sets.hpp"
#include "bitsphere/bitstring.hpp"
#include "bitsphere/bloch_map.hpp"
#include "bitsphere/chsh.hpp"
#include "bitsphere/cosine_rule.hpp"
#include "bitsphere/dyadic.hpp"
#include "bitsphere/errors.hpp"
#include "bitsphere/factorisation.hpp"
#include "bitsphere/ghz.hpp"
#include "bitsphere/multiqubit.hpp"
#include "bitsphere/niven.hpp"
#include "bitsphere/operator_matrix.hpp"
#include "bitsphere/padic.hpp"
#include "bitsphere/product_io.hpp"
#include "bitsphere/rational.hpp"
#include "bitsphere/report.hpp"
#include "bitsphere/resolution.hpp"
#include "bitsphere/sampling.hpp"
#include "bitsphere/stern_gerlach.hpp"
#include "bitsphere/theorems.hpp"
#include "bitsphere/uncertainty.hpp"
#include "bitsphere/witness.hpp"

namespace bitsphere {

inline constexpr const char *kVersion = "0.1.0";

}  // namespace bitsphere
