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

#include <string>
#include <string_view>

#include "json.hpp"
#include "revfft/circuit.hpp"

namespace revfft {

inline constexpr int CIRCUIT_FORMAT_VERSION = 1;

/// Circuit document:
///   {"version":1, "num_qubits":int,
///    "registers":[{"name":str,"qubits":[int,...]}],
///    "gates":[{"kind":str,"qubits":[int,...]}],
///    "metadata":{...}}
nlohmann::json circuit_to_json(const Circuit &circuit);

/// Throws std::invalid_argument on a malformed document, a version mismatch,
/// an unknown gate kind, or an out-of-range qubit.
Circuit circuit_from_json(const nlohmann::json &doc);

std::string serialize(const Circuit &circuit);
Circuit deserialize(std::string_view text);

}  // namespace revfft
