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


#include "revfft/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "revfft/qfft.hpp"
#include "revfft/simulator.hpp"
#include "test_util.hpp"

using namespace revfft;
using revfft::testing::random_input;
using revfft::testing::random_value;
using revfft::testing::run_pair;

namespace {

using cd = std::complex<double>;

std::vector<cd> as_complex(const std::vector<std::int64_t> &x) {
    return {x.begin(), x.end()};
}

}  // namespace

TEST(oracle_shear, short_digit_lists) {
    bool of = false;
    EXPECT_EQ(oracle_shear(17, -5, {}, 12, of), 17);
    std::vector<ShiftDigit> one{{0, DigitSign::ADD}};
    EXPECT_EQ(oracle_shear(17, -5, one, 12, of), 12);
    std::vector<ShiftDigit> halves{{1, DigitSign::ADD}, {2, DigitSign::SUB}};
    // floor(-5/2) - floor(-5/4) = -3 + 2
    EXPECT_EQ(oracle_shear(0, -5, halves, 12, of), -1);
    EXPECT_FALSE(of);
    EXPECT_EQ(oracle_shear(2047, 1, one, 12, of), -2048);
    EXPECT_TRUE(of);
}

TEST(oracle_shear, matches_circuit_chains) {
    std::mt19937_64 rng(12);
    const std::size_t w = 12;
    for (int t = 0; t < 1000; t++) {
        std::vector<ShiftDigit> digits;
        const int n = static_cast<int>(rng() % 4) + 1;
        for (int i = 0; i < n; i++) {
            digits.push_back({static_cast<int>(rng() % 9), rng() % 2 ? DigitSign::ADD : DigitSign::SUB});
        }
        auto a = random_value(rng, w);
        auto b = random_value(rng, w);
        bool of = false;
        auto r = run_pair(build_const_mac(w, digits), a, b);
        ASSERT_EQ(r.b, oracle_shear(b, a, digits, w, of));
    }
}

TEST(oracle_qfft, small_cases) {
    std::vector<std::int64_t> x2{5, 3};
    auto r = oracle_qfft(x2, 2, 3, 4);
    EXPECT_FALSE(r.overflow);
    EXPECT_EQ(r.slots, (std::vector<FixedComplex>{{8 << 4, 0}, {2 << 4, 0}}));
    std::vector<std::int64_t> x4{1, 2, 3, 4};
    r = oracle_qfft(x4, 4, 3, 6);
    EXPECT_EQ(r.slots, (std::vector<FixedComplex>{{10 << 6, 0}, {-2 << 6, 2 << 6}, {-2 << 6, 0}, {-2 << 6, -2 << 6}}));
}

TEST(oracle_qfft, equals_simulation) {
    std::mt19937_64 rng(77);
    for (std::size_t N : {2u, 4u, 8u}) {
        for (std::size_t m : {2u, 4u}) {
            for (std::size_t A : {6u, 10u}) {
                auto q = build_qfft(N, m, A);
                for (int t = 0; t < 10; t++) {
                    auto x = random_input(rng, N, m);
                    auto ref = oracle_qfft(x, N, m, A);
                    ASSERT_FALSE(ref.overflow);
                    auto out = run_basis(q.circuit, encode(x, q.layout));
                    ASSERT_EQ(read_slots(out, q.layout), ref.slots) << "N=" << N << " m=" << m << " A=" << A;
                    ASSERT_TRUE(out.is_zero(q.circuit.register_named("anc")));
                }
            }
        }
    }
}

TEST(oracle_qfft, flags_overflow) {
    std::vector<FixedComplex> big(4, FixedComplex{100, 0});
    EXPECT_TRUE(oracle_qfft_words(big, 4, 8).overflow);
    EXPECT_FALSE(oracle_qfft_words(big, 4, 12).overflow);
}

TEST(oracle_iqfft, mirrors_reversed_circuit_on_arbitrary_words) {
    std::mt19937_64 rng(5);
    for (std::size_t N : {4u, 8u}) {
        auto inv = build_iqfft(N, 3, 6);
        const auto &l = inv.layout;
        bool saw_inexact = false;
        for (int t = 0; t < 20; t++) {
            std::vector<FixedComplex> words(N);
            for (auto &z : words) {
                z = {random_value(rng, l.w - 3), random_value(rng, l.w - 3)};
            }
            BasisState s(l.num_qubits);
            write_slots(s, l, words);
            auto out = run_basis(inv.circuit, s);
            auto ref = oracle_iqfft_words(words, l.A, l.w);
            saw_inexact = saw_inexact || ref.inexact;
            ASSERT_EQ(read_slots(out, l), ref.slots);
        }
        EXPECT_TRUE(saw_inexact);
    }
}

TEST(oracle_iqfft, undoes_forward) {
    std::mt19937_64 rng(6);
    auto x = random_input(rng, 8, 4);
    auto fwd = oracle_qfft(x, 8, 4, 8);
    auto back = oracle_iqfft_words(fwd.slots, 8, 4 + 3 + 8 + 1);
    for (std::size_t p = 0; p < 8; p++) {
        EXPECT_EQ(back.slots[bit_reverse(p, 3)], (FixedComplex{x[p] << 8, 0}));
    }
}

TEST(oracle_filter, equals_simulation_and_is_exact) {
    std::mt19937_64 rng(9);
    for (std::size_t N : {4u, 8u}) {
        for (std::size_t cutoff : {std::size_t{1}, N / 2}) {
            auto f = build_filter(N, 3, 6, cutoff);
            for (int t = 0; t < 4; t++) {
                auto x = random_input(rng, N, 3);
                auto ref = oracle_filter(x, N, 3, 6, cutoff);
                EXPECT_FALSE(ref.low.overflow || ref.high.overflow);
                EXPECT_FALSE(ref.low.inexact || ref.high.inexact);
                EXPECT_EQ(ref.frac_bits, f.layout.frac_bits);
                auto out = run_basis(f.circuit, encode(x, f.layout));
                EXPECT_EQ(read_slots(out, f.layout), ref.low.slots);
                EXPECT_EQ(read_slots(out, f.layout, true), ref.high.slots);
            }
        }
    }
}

TEST(float_dft, basic_identities) {
    std::vector<cd> c(8, cd(3, 0));
    auto X = float_dft(c);
    EXPECT_NEAR(std::abs(X[0] - cd(24, 0)), 0, 1e-12);
    for (std::size_t k = 1; k < 8; k++) {
        EXPECT_NEAR(std::abs(X[k]), 0, 1e-12);
    }
    std::vector<cd> delta(8);
    delta[0] = 1;
    for (auto v : float_dft(delta)) {
        EXPECT_NEAR(std::abs(v - cd(1, 0)), 0, 1e-12);
    }

    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    std::vector<cd> x(16);
    for (auto &v : x) {
        v = {g(rng), g(rng)};
    }
    auto F = float_dft(x);
    double ex = 0;
    double eF = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        ex += std::norm(x[i]);
        eF += std::norm(F[i]);
    }
    EXPECT_NEAR(ex, eF / 16.0, 1e-9);
    EXPECT_LT(error_metrics(float_idft(F), x).l_inf, 1e-9);
}

TEST(error_metrics, values) {
    std::vector<cd> a{{1, 0}, {0, 2}};
    auto e = error_metrics(a, a);
    EXPECT_EQ(e.l_inf, 0);
    EXPECT_EQ(e.l2, 0);
    EXPECT_EQ(e.rel_l_inf, 0);
    std::vector<cd> b{{1, 0}, {0, 4}};
    e = error_metrics(a, b);
    EXPECT_DOUBLE_EQ(e.l_inf, 2);
    EXPECT_DOUBLE_EQ(e.rel_l_inf, 0.5);
    EXPECT_THROW(error_metrics(std::vector<cd>{}, std::vector<cd>{}), std::invalid_argument);
    EXPECT_THROW(error_metrics(a, std::vector<cd>{1}), std::invalid_argument);

    auto q = build_qfft(4, 3, 6);
    std::vector<std::int64_t> x{1, 2, 3, 4};
    auto got = decode_spectrum(run_basis(q.circuit, encode(x, q.layout)), q.layout);
    EXPECT_EQ(error_metrics(got, float_dft(as_complex(x))).l_inf, 0);
}
