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

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace revfft {

using Qubit = std::uint32_t;

/// Logical reversible gate kinds. Every kind acts as a permutation of
/// computational basis states.
///
/// Qubit order inside a gate is controls first, target(s) last:
///   X        (t)
///   CNOT     (c, t)
///   SWAP     (t0, t1)
///   TOFFOLI  (c0, c1, t)        t ^= c0 & c1
///   PERES    (a, b, c)          (a, b, c) -> (a, a^b, (a&b)^c)
///   PERES_DG (a, b, c)          inverse of PERES: (a, b, c) -> (a, a^b, (a&(a^b))^c)
enum class GateKind : std::uint8_t { X, CNOT, SWAP, TOFFOLI, PERES, PERES_DG };

inline constexpr std::array<GateKind, 6> ALL_GATE_KINDS = {
    GateKind::X, GateKind::CNOT, GateKind::SWAP, GateKind::TOFFOLI, GateKind::PERES, GateKind::PERES_DG};

std::size_t arity(GateKind kind);
GateKind inverse_kind(GateKind kind);

/// Number of two-qubit "quantum gates" a logical gate is worth when counted
/// at the controlled-V level (X and CNOT count 1, SWAP 3, TOFFOLI 5, PERES 4).
std::size_t expanded_weight(GateKind kind);

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

struct Gate {
    GateKind kind;
    std::array<Qubit, 3> qubits{};

    std::span<const Qubit> targets() const {
        return {qubits.data(), arity(kind)};
    }

    static Gate x(Qubit t) {
        return {GateKind::X, {t, 0, 0}};
    }
    static Gate cnot(Qubit c, Qubit t) {
        return {GateKind::CNOT, {c, t, 0}};
    }
    static Gate swap(Qubit a, Qubit b) {
        return {GateKind::SWAP, {a, b, 0}};
    }
    static Gate toffoli(Qubit c0, Qubit c1, Qubit t) {
        return {GateKind::TOFFOLI, {c0, c1, t}};
    }
    static Gate peres(Qubit a, Qubit b, Qubit c) {
        return {GateKind::PERES, {a, b, c}};
    }
    static Gate peres_dg(Qubit a, Qubit b, Qubit c) {
        return {GateKind::PERES_DG, {a, b, c}};
    }

    bool operator==(const Gate &other) const;
    std::string str() const;
};

/// Named group of qubits holding one word, least-significant qubit first.
struct Register {
    std::string name;
    std::vector<Qubit> qubits;

    std::size_t width() const {
        return qubits.size();
    }
    Qubit operator[](std::size_t bit) const {
        return qubits[bit];
    }
    Qubit sign() const {
        return qubits.back();
    }

    bool operator==(const Register &other) const = default;
};

/// Contiguous register of `width` qubits starting at `first`.
Register make_register(std::string name, Qubit first, std::size_t width);

/// Gate counts at the logical and the expanded (controlled-V level) granularity.
struct CircuitStats {
    std::array<std::size_t, ALL_GATE_KINDS.size()> logical_counts{};
    std::size_t expanded_count = 0;
    std::size_t num_gates = 0;
    std::size_t num_qubits = 0;
    std::size_t num_ancilla = 0;

    std::size_t operator[](GateKind kind) const {
        return logical_counts[static_cast<std::size_t>(kind)];
    }
};

/// An ordered list of logical reversible gates over `num_qubits` qubits.
///
/// Registers describe how words are laid out on the qubits. A register whose
/// name starts with "anc" is an ancilla pool: it must be zero on entry and is
/// zero again on exit.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    const std::vector<Register> &registers() const {
        return registers_;
    }
    const nlohmann::json &metadata() const {
        return metadata_;
    }
    nlohmann::json &metadata() {
        return metadata_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }

    /// Validates and appends. Throws std::invalid_argument on an out-of-range
    /// or repeated qubit.
    void append(const Gate &gate);
    void append(GateKind kind, std::initializer_list<Qubit> qubits);
    /// Appends every gate of `other`; both circuits must share a qubit space
    /// no larger than this one.
    void append(const Circuit &other);

    /// Adds a named register. Throws if it overlaps an existing register,
    /// has a repeated qubit, is empty, or leaves the qubit range.
    const Register &add_register(Register reg);
    const Register &register_named(std::string_view name) const;
    bool has_register(std::string_view name) const;

    /// Extends the qubit space to `n` qubits (never shrinks).
    void grow(std::size_t n);

    bool operator==(const Circuit &other) const;

   private:
    void check_gate(const Gate &gate) const;

    std::size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
    std::vector<Register> registers_;
    nlohmann::json metadata_ = nlohmann::json::object();
};

/// Circuit with the gate order reversed and each gate replaced by its inverse.
/// Registers and metadata are carried over unchanged.
Circuit invert(const Circuit &circuit);

CircuitStats count(const Circuit &circuit);
std::size_t expanded_count(std::span<const Gate> gates);

}  // namespace revfft
