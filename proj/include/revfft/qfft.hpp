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

#include <cstddef>
#include <optional>
#include <vector>

#include "json.hpp"
#include "revfft/arith.hpp"
#include "revfft/circuit.hpp"

namespace revfft {

struct SlotRegisters {
    Register real;
    Register imag;
};

/// Qubit assignment for an N-point transform. Slot j of the data bank is the
/// register pair (real_j, imag_j); slot input_slot[p] is loaded with x_p
/// (bit-reversed placement), and after the forward transform slot k holds X_k.
struct RegisterLayout {
    std::size_t N = 0;
    std::size_t m = 0;
    std::size_t A = 0;
    std::size_t w = 0;
    /// Fraction bits of the data bank after the circuit runs (A for a plain
    /// transform, A + guard_bits for the filter).
    std::size_t frac_bits = 0;
    std::size_t guard_bits = 0;
    std::vector<SlotRegisters> slots;
    std::vector<SlotRegisters> aux_slots;  // filter only
    std::vector<Qubit> ancilla;
    std::vector<std::size_t> input_slot;
    std::size_t num_qubits = 0;

    std::size_t log2N() const;
    nlohmann::json to_json() const;
    static RegisterLayout from_json(const nlohmann::json &doc);

    bool operator==(const RegisterLayout &other) const;
};

std::size_t bit_reverse(std::size_t index, std::size_t bits);

/// Word width m + log2(N) + A + 1.
std::size_t qfft_word_width(std::size_t N, std::size_t m, std::size_t A);

/// Throws std::invalid_argument unless N is a power of two >= 2, m >= 1 and
/// A >= 1 and the resulting word fits in 62 bits.
void validate_qfft_params(std::size_t N, std::size_t m, std::size_t A);

/// Fresh layout with word width `w` (at least qfft_word_width). `aux_bank`
/// adds a second bank of N zero slots.
RegisterLayout make_layout(std::size_t N, std::size_t m, std::size_t A, std::size_t w, bool aux_bank = false);

enum class RotationBranch { IDENTITY, UP, DOWN };

/// Lifting plan for multiplication by W_N^k = exp(-2 pi i k / N), 0 <= k < N/2.
/// UP:   re += t*im; im += s*re; re += t*im        (t = (cos-1)/sin, s = sin)
/// DOWN: re += u*im; im -= s*re; im = -im; re = -re; re += u*im
///       (u = (cos+1)/sin)
/// outer is t or u, inner is s. Digits list shifts in increasing order.
struct RotationPlan {
    std::size_t k = 0;
    std::size_t N = 0;
    std::size_t A = 0;
    RotationBranch branch = RotationBranch::IDENTITY;
    double theta = 0;
    double outer = 0;
    double inner = 0;
    std::int64_t outer_q = 0;  // quantized, units of 2^-A
    std::int64_t inner_q = 0;
    std::vector<ShiftDigit> outer_digits;
    std::vector<ShiftDigit> inner_digits;

    /// Largest digit shift in the plan (0 when there are no digits).
    int max_shift() const;
};

/// round(c * 2^A) with ties toward zero.
std::int64_t quantize_coefficient(double c, std::size_t A);

/// Signed binary digits of q * 2^-A: one digit of shift A - b per set bit b of |q|.
std::vector<ShiftDigit> coefficient_digits(std::int64_t q, std::size_t A);

RotationPlan plan_rotation(std::size_t k, std::size_t N, std::size_t A);

/// Negates every digit's sign.
std::vector<ShiftDigit> negated(std::vector<ShiftDigit> digits);

/// Appends the lifting rotation on (re, im).
void emit_rotation(Circuit &c, const SlotRegisters &slot, const RotationPlan &plan, std::span<const Qubit> ancilla);

/// Per component: (a, b) -> (a + b, a - b).
void emit_butterfly_sum_diff(Circuit &c, const SlotRegisters &a, const SlotRegisters &b);

/// (a, b) -> (a + W b, a - W b) with W = W_N^k.
void emit_butterfly(Circuit &c, const SlotRegisters &a, const SlotRegisters &b, const RotationPlan &plan,
                    std::span<const Qubit> ancilla);

/// Standalone circuits on a fresh two-slot layout (registers re0, im0, re1,
/// im1, anc) with word width w.
Circuit build_rotation(std::size_t w, const RotationPlan &plan);
Circuit build_butterfly_sum_diff(std::size_t w);
Circuit build_butterfly(std::size_t w, std::size_t k, std::size_t N, std::size_t A);

/// Ancillas needed by the transform network (digit extensions, plus negation
/// carries when the plan set contains DOWN rotations).
std::size_t qfft_ancilla_count(std::size_t N, std::size_t A, std::size_t w);

struct QfftCircuit {
    Circuit circuit;
    RegisterLayout layout;
};

/// Decimation-in-time network; output in natural order.
QfftCircuit build_qfft(std::size_t N, std::size_t m, std::size_t A);

/// Gate-reversed build_qfft.
QfftCircuit build_iqfft(std::size_t N, std::size_t m, std::size_t A);

/// Appends the forward network over `slots`, which are in slot order.
void emit_qfft_network(Circuit &c, std::span<const SlotRegisters> slots, std::size_t A,
                       std::span<const Qubit> ancilla);

/// Guard bits the filter adds so that the reversed network divides exactly.
std::size_t filter_guard_bits(std::size_t N, std::size_t A);

/// Forward transform on the data bank, spectrum scaled by 2^guard_bits,
/// slots k >= cutoff swapped into the auxiliary bank, then the reversed
/// network on both banks. 1 <= cutoff <= N (cutoff = N swaps nothing).
QfftCircuit build_filter(std::size_t N, std::size_t m, std::size_t A, std::size_t cutoff);

/// Bound {32w-33 + A(45w-42)} * (N/2) * log2 N.
std::size_t qfft_count_bound(std::size_t N, std::size_t A, std::size_t w);

}  // namespace revfft
