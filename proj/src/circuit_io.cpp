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
#include "revfft/circuit_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace revfft {

using nlohmann::json;

json circuit_to_json(const Circuit &circuit) {
    json doc;
    doc["version"] = CIRCUIT_FORMAT_VERSION;
    doc["num_qubits"] = circuit.num_qubits();
    auto regs = json::array();
    for (const auto &r : circuit.registers()) {
        regs.push_back({{"name", r.name}, {"qubits", r.qubits}});
    }
    doc["registers"] = std::move(regs);
    auto gates = json::array();
    for (const auto &g : circuit.gates()) {
        auto qs = g.targets();
        gates.push_back({{"kind", gate_name(g.kind)}, {"qubits", std::vector<Qubit>(qs.begin(), qs.end())}});
    }
    doc["gates"] = std::move(gates);
    doc["metadata"] = circuit.metadata();
    return doc;
}

namespace {

const json &require(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw std::invalid_argument(std::string("circuit document is missing \"") + key + "\"");
    }
    return obj.at(key);
}

std::vector<Qubit> qubit_list(const json &arr) {
    if (!arr.is_array()) {
        throw std::invalid_argument("\"qubits\" must be an array");
    }
    std::vector<Qubit> out;
    for (const auto &q : arr) {
        if (!q.is_number_unsigned()) {
            throw std::invalid_argument("qubit indices must be non-negative integers");
        }
        out.push_back(q.get<Qubit>());
    }
    return out;
}

}  // namespace

Circuit circuit_from_json(const json &doc) {
    const auto &version = require(doc, "version");
    if (!version.is_number_integer() || version.get<int>() != CIRCUIT_FORMAT_VERSION) {
        throw std::invalid_argument("unsupported circuit format version " + version.dump());
    }
    const auto &nq = require(doc, "num_qubits");
    if (!nq.is_number_unsigned()) {
        throw std::invalid_argument("\"num_qubits\" must be a non-negative integer");
    }
    Circuit circuit(nq.get<std::size_t>());
    for (const auto &r : require(doc, "registers")) {
        const auto &name = require(r, "name");
        if (!name.is_string()) {
            throw std::invalid_argument("register name must be a string");
        }
        circuit.add_register(Register{name.get<std::string>(), qubit_list(require(r, "qubits"))});
    }
    for (const auto &g : require(doc, "gates")) {
        const auto &kind_field = require(g, "kind");
        if (!kind_field.is_string()) {
            throw std::invalid_argument("gate kind must be a string");
        }
        GateKind kind = gate_kind_from_name(kind_field.get<std::string>());
        auto qs = qubit_list(require(g, "qubits"));
        if (qs.size() != arity(kind)) {
            throw std::invalid_argument(
                "gate " + kind_field.get<std::string>() + " expects " + std::to_string(arity(kind)) + " qubits");
        }
        Gate gate{kind, {}};
        std::copy(qs.begin(), qs.end(), gate.qubits.begin());
        circuit.append(gate);
    }
    if (doc.contains("metadata")) {
        circuit.metadata() = doc.at("metadata");
    }
    return circuit;
}

std::string serialize(const Circuit &circuit) {
    return circuit_to_json(circuit).dump();
}

Circuit deserialize(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed circuit document: ") + e.what());
    }
    return circuit_from_json(doc);
}

}  // namespace revfft
