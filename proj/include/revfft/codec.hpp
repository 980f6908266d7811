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

#include "revfft/qfft.hpp"
#include "revfft/simulator.hpp"

namespace revfft {

/// Raw register pair of one slot, as signed words.
struct FixedComplex {
    std::int64_t re = 0;
    std::int64_t im = 0;

    bool operator==(const FixedComplex &other) const = default;
};

/// Loads x_p * 2^A into the real register of slot input_slot[p]; everything
/// else is zero. Requires N values in [0, 2^m - 1].
BasisState encode(std::span<const std::int64_t> data, const RegisterLayout &layout);

/// Words of every slot of a bank, in slot order.
std::vector<FixedComplex> read_slots(const BasisState &state, const RegisterLayout &layout, bool aux = false);
void write_slots(BasisState &state, const RegisterLayout &layout, std::span<const FixedComplex> words,
                 bool aux = false);

/// Slot k as X_k, scaled by 2^-A.
std::vector<std::complex<double>> decode_spectrum(const BasisState &state, const RegisterLayout &layout);

/// Slot input_slot[p] as x_p, scaled by 2^-frac_bits.
std::vector<std::complex<double>> decode_data(const BasisState &state, const RegisterLayout &layout,
                                              bool aux = false);

std::vector<std::complex<double>> to_complex(std::span<const FixedComplex> words, std::size_t frac_bits);

/// Reorders slot-ordered words into data order.
std::vector<FixedComplex> data_order(std::span<const FixedComplex> slots, const RegisterLayout &layout);

}  // namespace revfft
