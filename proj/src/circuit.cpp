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

#include "revfft/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace revfft {

std::size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return 1;
        case GateKind::CNOT:
        case GateKind::SWAP:
            return 2;
        case GateKind::TOFFOLI:
        case GateKind::PERES:
        case GateKind::PERES_DG:
            return 3;
    }
    throw std::invalid_argument("unknown gate kind");
}

GateKind inverse_kind(GateKind kind) {
    switch (kind) {
        case GateKind::PERES:
            return GateKind::PERES_DG;
        case GateKind::PERES_DG:
            return GateKind::PERES;
        default:
            return kind;
    }
}

std::size_t expanded_weight(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::CNOT:
            return 1;
        case GateKind::SWAP:
            return 3;
        case GateKind::TOFFOLI:
            return 5;
        case GateKind::PERES:
        case GateKind::PERES_DG:
            return 4;
    }
    throw std::invalid_argument("unknown gate kind");
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::TOFFOLI:
            return "TOFFOLI";
        case GateKind::PERES:
            return "PERES";
        case GateKind::PERES_DG:
            return "PERES_DG";
    }
    throw std::invalid_argument("unknown gate kind");
}

GateKind gate_kind_from_name(std::string_view name) {
    for (auto kind : ALL_GATE_KINDS) {
        if (gate_name(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind) {
        return false;
    }
    auto a = targets();
    auto b = other.targets();
    return std::equal(a.begin(), a.end(), b.begin());
}

std::string Gate::str() const {
    std::stringstream out;
    out << gate_name(kind) << '(';
    bool first = true;
    for (auto q : targets()) {
        out << (first ? "" : ",") << q;
        first = false;
    }
    out << ')';
    return out.str();
}

Register make_register(std::string name, Qubit first, std::size_t width) {
    Register r{std::move(name), {}};
    r.qubits.reserve(width);
    for (std::size_t k = 0; k < width; k++) {
        r.qubits.push_back(first + static_cast<Qubit>(k));
    }
    return r;
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
}

void Circuit::check_gate(const Gate &gate) const {
    auto qs = gate.targets();
    for (std::size_t i = 0; i < qs.size(); i++) {
        if (qs[i] >= num_qubits_) {
            throw std::invalid_argument(
                "gate " + gate.str() + " uses qubit " + std::to_string(qs[i]) + " but the circuit has " +
                std::to_string(num_qubits_) + " qubits");
        }
        for (std::size_t j = 0; j < i; j++) {
            if (qs[i] == qs[j]) {
                throw std::invalid_argument("gate " + gate.str() + " repeats qubit " + std::to_string(qs[i]));
            }
        }
    }
}

void Circuit::append(const Gate &gate) {
    check_gate(gate);
    gates_.push_back(gate);
}

void Circuit::append(GateKind kind, std::initializer_list<Qubit> qubits) {
    if (qubits.size() != arity(kind)) {
        throw std::invalid_argument(
            std::string(gate_name(kind)) + " takes " + std::to_string(arity(kind)) + " qubits, got " +
            std::to_string(qubits.size()));
    }
    Gate g{kind, {}};
    std::copy(qubits.begin(), qubits.end(), g.qubits.begin());
    append(g);
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::invalid_argument("appended circuit uses more qubits than the destination");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

const Register &Circuit::add_register(Register reg) {
    if (reg.qubits.empty()) {
        throw std::invalid_argument("register '" + reg.name + "' is empty");
    }
    if (has_register(reg.name)) {
        throw std::invalid_argument("duplicate register name '" + reg.name + "'");
    }
    std::vector<bool> used(num_qubits_, false);
    for (const auto &r : registers_) {
        for (auto q : r.qubits) {
            used[q] = true;
        }
    }
    std::vector<bool> mine(num_qubits_, false);
    for (auto q : reg.qubits) {
        if (q >= num_qubits_) {
            throw std::invalid_argument("register '" + reg.name + "' leaves the qubit range");
        }
        if (mine[q]) {
            throw std::invalid_argument("register '" + reg.name + "' repeats qubit " + std::to_string(q));
        }
        if (used[q]) {
            throw std::invalid_argument("register '" + reg.name + "' overlaps an existing register");
        }
        mine[q] = true;
    }
    registers_.push_back(std::move(reg));
    return registers_.back();
}

const Register &Circuit::register_named(std::string_view name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::invalid_argument("no register named '" + std::string(name) + "'");
}

bool Circuit::has_register(std::string_view name) const {
    return std::any_of(registers_.begin(), registers_.end(), [&](const Register &r) {
        return r.name == name;
    });
}

void Circuit::grow(std::size_t n) {
    num_qubits_ = std::max(num_qubits_, n);
}

bool Circuit::operator==(const Circuit &other) const {
    return num_qubits_ == other.num_qubits_ && gates_ == other.gates_ && registers_ == other.registers_ &&
           metadata_ == other.metadata_;
}

Circuit invert(const Circuit &circuit) {
    Circuit result(circuit.num_qubits());
    for (const auto &r : circuit.registers()) {
        result.add_register(r);
    }
    result.metadata() = circuit.metadata();
    const auto &gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        g.kind = inverse_kind(g.kind);
        result.append(g);
    }
    return result;
}

std::size_t expanded_count(std::span<const Gate> gates) {
    std::size_t total = 0;
    for (const auto &g : gates) {
        total += expanded_weight(g.kind);
    }
    return total;
}

CircuitStats count(const Circuit &circuit) {
    CircuitStats stats;
    for (const auto &g : circuit.gates()) {
        stats.logical_counts[static_cast<std::size_t>(g.kind)]++;
        stats.expanded_count += expanded_weight(g.kind);
    }
    stats.num_gates = circuit.size();
    stats.num_qubits = circuit.num_qubits();
    for (const auto &r : circuit.registers()) {
        if (r.name.rfind("anc", 0) == 0) {
            stats.num_ancilla += r.width();
        }
    }
    return stats;
}

}  // namespace revfft
