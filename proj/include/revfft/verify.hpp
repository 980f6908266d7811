// Copyright 2026 The revfft Authors
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
#include <string>
#include <vector>

#include "json.hpp"

namespace revfft {

struct VerifyConfig {
    std::vector<std::size_t> Ns{2, 4, 8};
    std::vector<std::size_t> ms{2, 4};
    std::vector<std::size_t> As{6, 10};
    std::size_t cases = 50;
    std::size_t roundtrip_cases = 20;
    std::vector<std::size_t> accuracy_As{4, 6, 8, 10, 12};
    std::size_t accuracy_inputs = 10;
    std::uint64_t seed = 1;
    /// Appends a stray X gate to the circuits under test.
    bool inject_fault = false;
};

struct CheckRow {
    std::string check;
    std::size_t N = 0;
    std::size_t m = 0;
    std::size_t A = 0;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;

    bool passed() const {
        return failures == 0;
    }
};

struct AccuracyRow {
    std::size_t A = 0;
    double l_inf = 0;
    double rel_l_inf = 0;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckRow> rows;
    std::vector<AccuracyRow> accuracy;
    bool accuracy_monotone = true;
    bool passed = true;
    /// First failing case, null when everything passed.
    nlohmann::json first_failure;

    nlohmann::json to_json() const;
    std::string table() const;
};

/// Seeded cross-checks: circuit vs oracle word for word, forward then reversed
/// network on random basis states, gate-count bounds, and the accuracy sweep
/// (N = 8, m = 4) against the floating-point DFT. Cases run in parallel; the
/// report depends only on the config.
VerifyReport run_verification(const VerifyConfig &config);

}  // namespace revfft
