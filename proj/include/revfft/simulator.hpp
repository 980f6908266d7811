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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "revfft/circuit.hpp"
#include "revfft/templates.hpp"

namespace revfft {

/// Computational basis state of a fixed number of qubits, bit-packed.
class BasisState {
   public:
    BasisState() = default;
    explicit BasisState(std::size_t num_qubits);

    std::size_t size() const {
        return num_qubits_;
    }

    bool get(Qubit q) const {
        return (words_[q >> 6] >> (q & 63)) & 1;
    }
    void set(Qubit q, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (q & 63);
        words_[q >> 6] = value ? (words_[q >> 6] | mask) : (words_[q >> 6] & ~mask);
    }
    void flip(Qubit q) {
        words_[q >> 6] ^= std::uint64_t{1} << (q & 63);
    }

    /// Bits of a register (at most 64 wide) as an unsigned word, LSB first.
    std::uint64_t read_bits(const Register &reg) const;
    void write_bits(const Register &reg, std::uint64_t bits);
    /// Two's-complement value of a register (at most 63 wide).
    std::int64_t read_signed(const Register &reg) const;
    void write_signed(const Register &reg, std::int64_t value);

    bool is_zero(const Register &reg) const;

    /// Bits as text, qubit 0 first.
    std::string str() const;

    bool operator==(const BasisState &other) const = default;
    auto operator<=>(const BasisState &other) const = default;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Applies one logical gate's truth-table action.
void apply_gate(const Gate &gate, BasisState &state);

/// Runs the circuit on a basis state. Throws std::invalid_argument on a size mismatch.
BasisState run_basis(const Circuit &circuit, BasisState state);

/// Reference single-threaded batch simulation.
std::vector<BasisState> run_batch_serial(const Circuit &circuit, std::vector<BasisState> states);

/// Batch simulation with states distributed over OpenMP threads. Output order
/// matches input order and is bit-identical to run_batch_serial.
std::vector<BasisState> run_batch(const Circuit &circuit, std::vector<BasisState> states);

using Amplitude = std::complex<double>;

/// Superposition of basis states with nonzero amplitudes, normalised to 1.
class SparseState {
   public:
    using Term = std::pair<BasisState, Amplitude>;

    /// Throws std::invalid_argument on zero amplitudes, repeated basis states,
    /// size mismatches, or a norm that differs from 1 by more than 1e-9.
    explicit SparseState(std::vector<Term> terms);

    static SparseState basis(BasisState state);

    const std::vector<Term> &terms() const {
        return terms_;
    }
    std::size_t num_qubits() const {
        return terms_.front().first.size();
    }
    /// Amplitude of a basis state, zero when absent.
    Amplitude amplitude(const BasisState &state) const;

   private:
    std::vector<Term> terms_;  // sorted by basis state
};

/// Applies the circuit term by term; amplitudes are carried unchanged.
SparseState run(const Circuit &circuit, const SparseState &state);

/// 2x2 V with V^2 = X.
Eigen::Matrix2cd v_matrix();

/// Dense unitary of a two-qubit gate sequence on `num_qubits` <= 4 local
/// qubits (basis index bit k is local qubit k), composed in application order.
Eigen::MatrixXcd small_unitary(std::span<const TwoQubitOp> ops, unsigned num_qubits);

/// Permutation matrix of a logical gate acting on local qubits 0..arity-1.
Eigen::MatrixXcd permutation_matrix(GateKind kind);

}  // namespace revfft
