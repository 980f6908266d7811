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
#include "revfft/templates.hpp"

#include <stdexcept>
#include <string>

namespace revfft {

std::vector<TwoQubitOp> expand_three_qubit_template(GateKind kind) {
    using K = TwoQubitOp::Kind;
    // a = 0, b = 1, c = 2. V^2 = X, so the phase exponents on c must sum to 2ab.
    switch (kind) {
        case GateKind::TOFFOLI:
            return {{K::CV, 1, 2}, {K::CNOT, 0, 1}, {K::CV_DG, 1, 2}, {K::CNOT, 0, 1}, {K::CV, 0, 2}};
        case GateKind::PERES:
            return {{K::CV, 1, 2}, {K::CNOT, 0, 1}, {K::CV_DG, 1, 2}, {K::CV, 0, 2}};
        case GateKind::PERES_DG:
            return {{K::CV_DG, 0, 2}, {K::CV, 1, 2}, {K::CNOT, 0, 1}, {K::CV_DG, 1, 2}};
        default:
            throw std::invalid_argument(
                "no controlled-V template for " + std::string(gate_name(kind)));
    }
}

}  // namespace revfft
