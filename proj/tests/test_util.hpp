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

#include <cstdint>
#include <random>
#include <vector>

#include "revfft/circuit.hpp"
#include "revfft/simulator.hpp"

namespace revfft::testing {

/// Reduces v to the w-bit two's-complement range.
inline std::int64_t wrap(std::int64_t v, std::size_t w) {
    const std::int64_t mod = std::int64_t{1} << w;
    std::int64_t r = ((v % mod) + mod) % mod;
    return r >= (mod >> 1) ? r - mod : r;
}

/// floor(v / 2^p) computed by division rather than by shifting.
inline std::int64_t floor_div_pow2(std::int64_t v, int p) {
    const std::int64_t d = std::int64_t{1} << p;
    std::int64_t q = v / d;
    if (v % d != 0 && v < 0) {
        q -= 1;
    }
    return q;
}

inline std::int64_t min_value(std::size_t w) {
    return -(std::int64_t{1} << (w - 1));
}

inline std::int64_t max_value(std::size_t w) {
    return (std::int64_t{1} << (w - 1)) - 1;
}

inline std::int64_t random_value(std::mt19937_64 &rng, std::size_t w) {
    std::uniform_int_distribution<std::int64_t> dist(min_value(w), max_value(w));
    return dist(rng);
}

/// N samples in [0, 2^m - 1].
inline std::vector<std::int64_t> random_input(std::mt19937_64 &rng, std::size_t N, std::size_t m) {
    std::uniform_int_distribution<std::int64_t> dist(0, (std::int64_t{1} << m) - 1);
    std::vector<std::int64_t> x(N);
    for (auto &v : x) {
        v = dist(rng);
    }
    return x;
}

struct PairResult {
    std::int64_t a;
    std::int64_t b;
    bool ancilla_clean;
};

/// Runs a standalone two-word circuit (registers "a", "b", optional "anc").
inline PairResult run_pair(const Circuit &c, std::int64_t a, std::int64_t b) {
    BasisState s(c.num_qubits());
    s.write_signed(c.register_named("a"), a);
    s.write_signed(c.register_named("b"), b);
    s = run_basis(c, s);
    bool clean = !c.has_register("anc") || s.is_zero(c.register_named("anc"));
    return {s.read_signed(c.register_named("a")), s.read_signed(c.register_named("b")), clean};
}

}  // namespace revfft::testing
