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
#include <cstdint>
#include <span>
#include <vector>

#include "revfft/circuit.hpp"

namespace revfft {

/// Two's-complement fixed-point word: value = signed(word) * 2^-frac_bits.
struct FixedPointFormat {
    std::size_t total_bits;
    std::size_t frac_bits;

    FixedPointFormat(std::size_t total_bits, std::size_t frac_bits);

    std::int64_t min_raw() const;
    std::int64_t max_raw() const;
    bool contains(std::int64_t raw) const;
    double to_double(std::int64_t raw) const;
};

enum class SubtractVariant { A_MINUS_B, B_MINUS_A };
enum class ShiftDirection { LEFT, RIGHT };
enum class DigitSign : int { ADD = 1, SUB = -1 };

/// One term of a shift-and-add chain: target += sign * floor(source * 2^-shift).
/// A negative shift multiplies the source by 2^|shift| (its top |shift| bits
/// must be sign fill).
struct ShiftDigit {
    int shift;
    DigitSign sign;

    bool operator==(const ShiftDigit &other) const = default;
};

// The emit_* functions append gates to an existing circuit. Registers must
// belong to that circuit's qubit space; they throw std::invalid_argument on
// width mismatches, overlapping operands or a short ancilla pool.

/// CNOT the sign qubit of src onto every qubit of extra (which must be zero).
void emit_sign_extend(Circuit &c, const Register &src, const Register &extra);

/// |a>|b> -> |a>|a+b mod 2^w>. No ancilla; expanded count 13w-14.
void emit_adder(Circuit &c, const Register &a, const Register &b);

/// A_MINUS_B: |a>|b> -> |a>|a-b>.  B_MINUS_A: |a>|b> -> |a>|b-a>.
void emit_subtractor(Circuit &c, const Register &a, const Register &b, SubtractVariant variant);

/// Zeroed ancillas needed by emit_negate for a width-w word.
std::size_t negate_ancilla_count(std::size_t w);

/// |b> -> |-b mod 2^w>: complement, then increment through a carry chain
/// held in negate_ancilla_count(w) zeroed ancillas (restored to zero).
void emit_negate(Circuit &c, const Register &b, std::span<const Qubit> ancilla);

/// Arithmetic shift by p positions, built from p unit shifts of one CNOT and
/// w-2 SWAPs each. LEFT requires the top p+1 bits to be equal and multiplies
/// by 2^p. RIGHT is the exact gate-inverse of LEFT: the low w-p-1 bits and the
/// sign bit hold floor(a / 2^p), and the p dropped bits are parked, XORed with
/// the sign, in the p positions just below the sign bit (see
/// right_shift_value).
void emit_shift(Circuit &c, const Register &reg, std::size_t p, ShiftDirection dir);

/// Word value after a RIGHT shift by p, reading the parked positions as sign fill.
std::int64_t right_shift_value(std::uint64_t bits, std::size_t w, std::size_t p);

/// Zeroed ancillas a shift-and-add chain over the digits needs on w-bit words.
std::size_t mac_ancilla_count(std::span<const ShiftDigit> digits, std::size_t w);

/// b += sign * floor(a * 2^-p). Shifts of w - 1 or more give the sign fill
/// of a. Uses |p| (at most w - 1 for p > 0) zeroed ancillas from the pool as the
/// sign extension (p > 0) or low zero bits (p < 0) of a, and returns them to 0.
void emit_shift_add(Circuit &c, const Register &a, const Register &b, int p, DigitSign sign,
                    std::span<const Qubit> ancilla);

/// Sequential shift-adds b += sum_t sign_t * floor(a * 2^-p_t). The sign
/// extension of a is computed once for the whole chain and complement pairs
/// between consecutive subtracting digits cancel, so the result equals the
/// digit-by-digit composition with fewer gates.
void emit_const_mac(Circuit &c, const Register &a, const Register &b, std::span<const ShiftDigit> digits,
                    std::span<const Qubit> ancilla);

// Standalone builders: fresh circuits whose registers are "a" (qubits 0..w-1),
// "b" (next w qubits) and, when needed, "anc".

Circuit build_sign_extend(std::size_t w, std::size_t extra);
Circuit build_adder(std::size_t w);
Circuit build_subtractor(std::size_t w, SubtractVariant variant);
Circuit build_negate(std::size_t w);
Circuit build_shift(std::size_t w, std::size_t p, ShiftDirection dir);
Circuit build_shift_add(std::size_t w, int p, DigitSign sign);
Circuit build_const_mac(std::size_t w, std::span<const ShiftDigit> digits);

}  // namespace revfft
