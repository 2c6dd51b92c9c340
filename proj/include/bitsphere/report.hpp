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

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace bitsphere {

/// One exhaustive sub-search inside a theorem verification.
struct SubCheck {
    std::string name;
    uint64_t search_space_size = 0;
    uint64_t solutions_found = 0;
    /// Up to a handful of (index, index) pairs that satisfied the equation.
    std::vector<std::pair<int64_t, int64_t>> witnesses;
    std::string note;
};

/// Outcome of verifying one theorem at one resolution. A nonzero
/// solutions_found is a falsification, not an error.
struct VerificationReport {
    std::string theorem;
    uint64_t n = 0;
    uint64_t search_space_size = 0;
    uint64_t solutions_found = 0;
    double elapsed_ms = 0.0;
    std::vector<SubCheck> checks;

    bool falsified() const {
        return solutions_found != 0;
    }

    void add(SubCheck check) {
        search_space_size += check.search_space_size;
        solutions_found += check.solutions_found;
        checks.push_back(std::move(check));
    }

    nlohmann::json to_json() const {
        nlohmann::json sub = nlohmann::json::array();
        for (const auto &c : checks) {
            nlohmann::json w = nlohmann::json::array();
            for (const auto &[a, b] : c.witnesses) w.push_back({a, b});
            sub.push_back({{"name", c.name},
                           {"search_space_size", c.search_space_size},
                           {"solutions_found", c.solutions_found},
                           {"witnesses", w},
                           {"note", c.note}});
        }
        return {{"theorem", theorem},
                {"N", n},
                {"search_space_size", search_space_size},
                {"solutions_found", solutions_found},
                {"elapsed_ms", elapsed_ms},
                {"checks", sub}};
    }
};

/// Wall-clock milliseconds since construction.
class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {
    }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace bitsphere
