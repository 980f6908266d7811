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
#include <vector>

#include "revfft/arith.hpp"
#include "revfft/codec.hpp"

namespace revfft {

// Word-level reference for the compiled networks. Words are w-bit two's
// complement values held in int64; every result is reduced mod 2^w and
// `overflow` records whether any intermediate left the representable range.

struct OracleResult {
    std::vector<FixedComplex> slots;  // slot order
    bool overflow = false;
    /// Set when the reversed network halved an odd value.
    bool inexact = false;
};

/// target + sum_t sign_t * floor(source / 2^p_t), digit by digit.
std::int64_t oracle_shear(std::int64_t target, std::int64_t source, std::span<const ShiftDigit> digits,
                          std::size_t w, bool &overflow);

/// Forward network on slot-ordered words.
OracleResult oracle_qfft_words(std::vector<FixedComplex> slots, std::size_t A, std::size_t w);

/// Gate-reversed network on slot-ordered words.
OracleResult oracle_iqfft_words(std::vector<FixedComplex> slots, std::size_t A, std::size_t w);

/// Loads data (bit-reversed, scaled by 2^A) and runs the forward network at
/// width m + log2 N + A + 1.
OracleResult oracle_qfft(std::span<const std::int64_t> data, std::size_t N, std::size_t m, std::size_t A);

struct FilterOracleResult {
    OracleResult low;   // data bank, slot order
    OracleResult high;  // auxiliary bank, slot order
    std::size_t guard_bits = 0;
    std::size_t frac_bits = 0;
};

FilterOracleResult oracle_filter(std::span<const std::int64_t> data, std::size_t N, std::size_t m, std::size_t A,
                                 std::size_t cutoff);

/// X_k = sum_j x_j exp(-2 pi i jk / N), direct summation.
std::vector<std::complex<double>> float_dft(std::span<const std::complex<double>> x);
/// x_j = (1/N) sum_k X_k exp(2 pi i jk / N).
std::vector<std::complex<double>> float_idft(std::span<const std::complex<double>> X);

struct ErrorMetrics {
    double l_inf = 0;
    double l2 = 0;
    double rel_l_inf = 0;  // l_inf / max |reference|
};

/// Throws std::invalid_argument on empty or unequal inputs.
ErrorMetrics error_metrics(std::span<const std::complex<double>> value,
                           std::span<const std::complex<double>> reference);

}  // namespace revfft
