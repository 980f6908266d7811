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

#include <vector>

#include "revfft/circuit.hpp"

namespace revfft {

/// Two-qubit unitary from the controlled-V gate set, on local qubit indices.
struct TwoQubitOp {
    enum class Kind { CNOT, CV, CV_DG };
    Kind kind;
    unsigned control;
    unsigned target;

    bool operator==(const TwoQubitOp &other) const = default;
};

/// Controlled-V network realising a three-qubit logical gate on local qubits
/// (0, 1, 2) in the gate's own qubit order, listed in application order.
/// Toffoli needs 5 two-qubit gates, Peres and its inverse 4. Throws
/// std::invalid_argument for kinds that are not three-qubit gates.
std::vector<TwoQubitOp> expand_three_qubit_template(GateKind kind);

}  // namespace revfft
