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


#include "revfft/codec.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace revfft {

BasisState encode(std::span<const std::int64_t> data, const RegisterLayout &layout) {
    if (data.size() != layout.N) {
        throw std::invalid_argument(
            "expected " + std::to_string(layout.N) + " values, got " + std::to_string(data.size()));
    }
    const std::int64_t hi = (std::int64_t{1} << layout.m) - 1;
    BasisState state(layout.num_qubits);
    for (std::size_t p = 0; p < data.size(); p++) {
        if (data[p] < 0 || data[p] > hi) {
            throw std::invalid_argument(
                "value " + std::to_string(data[p]) + " at index " + std::to_string(p) + " is outside [0, " +
                std::to_string(hi) + "]");
        }
        state.write_signed(layout.slots[layout.input_slot[p]].real, data[p] << layout.A);
    }
    return state;
}

std::vector<FixedComplex> read_slots(const BasisState &state, const RegisterLayout &layout, bool aux) {
    const auto &bank = aux ? layout.aux_slots : layout.slots;
    std::vector<FixedComplex> out;
    out.reserve(bank.size());
    for (const auto &s : bank) {
        out.push_back({state.read_signed(s.real), state.read_signed(s.imag)});
    }
    return out;
}

void write_slots(BasisState &state, const RegisterLayout &layout, std::span<const FixedComplex> words, bool aux) {
    const auto &bank = aux ? layout.aux_slots : layout.slots;
    if (words.size() != bank.size()) {
        throw std::invalid_argument("word count does not match the bank");
    }
    for (std::size_t j = 0; j < bank.size(); j++) {
        state.write_signed(bank[j].real, words[j].re);
        state.write_signed(bank[j].imag, words[j].im);
    }
}

std::vector<std::complex<double>> to_complex(std::span<const FixedComplex> words, std::size_t frac_bits) {
    std::vector<std::complex<double>> out;
    out.reserve(words.size());
    const int e = -static_cast<int>(frac_bits);
    for (const auto &v : words) {
        out.emplace_back(std::ldexp(static_cast<double>(v.re), e), std::ldexp(static_cast<double>(v.im), e));
    }
    return out;
}

std::vector<FixedComplex> data_order(std::span<const FixedComplex> slots, const RegisterLayout &layout) {
    std::vector<FixedComplex> out;
    out.reserve(layout.N);
    for (std::size_t p = 0; p < layout.N; p++) {
        out.push_back(slots[layout.input_slot[p]]);
    }
    return out;
}

std::vector<std::complex<double>> decode_spectrum(const BasisState &state, const RegisterLayout &layout) {
    return to_complex(read_slots(state, layout), layout.A);
}

std::vector<std::complex<double>> decode_data(const BasisState &state, const RegisterLayout &layout, bool aux) {
    auto words = read_slots(state, layout, aux);
    return to_complex(data_order(words, layout), layout.frac_bits);
}

}  // namespace revfft
