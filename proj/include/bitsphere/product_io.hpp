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
#include <vector>

#include <nlohmann/json.hpp>

#include "bitsphere/multiqubit.hpp"

// File format for ProductStateJ:
//   {"N": 8, "J": 2, "layout": "preorder",
//    "m_params": [...], "n_params": [...], "strings": ["a:0101...", ...]}
// m_params and n_params list the 2^J - 1 tree nodes in pre-order (root,
// plain subtree, negated subtree). On load the state is rebuilt from the
// parameters and must reproduce the stored strings.

namespace bitsphere {

inline nlohmann::json to_json(const ProductStateJ &s) {
    std::vector<std::string> strings;
    for (const auto &b : s.strings()) strings.push_back(b.str());
    return {{"N", s.resolution().size()}, {"J", s.depth()},     {"layout", "preorder"},
            {"m_params", s.m_params()},   {"n_params", s.n_params()}, {"strings", strings}};
}

inline ProductStateJ product_from_json(const nlohmann::json &j) {
    if (j.contains("layout") && j.at("layout") != "preorder") {
        throw std::invalid_argument("unsupported product-state layout " + j.at("layout").dump());
    }
    const Resolution r(j.at("N").get<uint64_t>());
    const int depth = j.at("J").get<int>();
    const auto m = j.at("m_params").get<std::vector<int64_t>>();
    const auto n = j.at("n_params").get<std::vector<int64_t>>();
    std::vector<Axis> axes;
    std::vector<BitString> stored;
    if (j.contains("strings")) {
        for (const auto &text : j.at("strings")) stored.push_back(BitString::parse(text.get<std::string>()));
        for (const auto &b : stored) axes.push_back(b.axis());
    }
    ProductStateJ s = make_productJ(r, depth, m, n, axes);
    if (!stored.empty() && stored != s.strings()) {
        throw std::invalid_argument("stored strings do not match the parameters");
    }
    return s;
}

}  // namespace bitsphere
