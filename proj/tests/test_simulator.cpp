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


#include "revfft/simulator.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "revfft/codec.hpp"
#include "revfft/qfft.hpp"
#include "test_util.hpp"

using namespace revfft;
using revfft::testing::random_input;
using revfft::testing::random_value;

namespace {

BasisState bits(const std::string &s) {
    BasisState out(s.size());
    for (std::size_t i = 0; i < s.size(); i++) {
        out.set(static_cast<Qubit>(i), s[i] == '1');
    }
    return out;
}

Circuit one_gate(std::size_t n, Gate g) {
    Circuit c(n);
    c.append(g);
    return c;
}

}  // namespace

TEST(run_basis, truth_tables) {
    EXPECT_EQ(run_basis(one_gate(2, Gate::x(0)), bits("00")).str(), "10");
    EXPECT_EQ(run_basis(one_gate(3, Gate::toffoli(0, 1, 2)), bits("110")).str(), "111");
    EXPECT_EQ(run_basis(one_gate(3, Gate::toffoli(0, 1, 2)), bits("100")).str(), "100");
    EXPECT_EQ(run_basis(one_gate(3, Gate::peres(0, 1, 2)), bits("110")).str(), "101");
    EXPECT_EQ(run_basis(one_gate(2, Gate::swap(0, 1)), bits("10")).str(), "01");
    for (std::uint64_t v = 0; v < 8; v++) {
        BasisState s(3);
        s.write_bits(make_register("all", 0, 3), v);
        auto p = run_basis(one_gate(3, Gate::peres(0, 1, 2)), s);
        EXPECT_EQ(run_basis(one_gate(3, Gate::peres_dg(0, 1, 2)), p), s);
    }
    EXPECT_THROW(run_basis(one_gate(3, Gate::x(0)), BasisState(4)), std::invalid_argument);
}

TEST(basis_state, signed_access) {
    BasisState s(10);
    Register r = make_register("r", 2, 5);
    s.write_signed(r, -7);
    EXPECT_EQ(s.read_signed(r), -7);
    EXPECT_EQ(s.read_bits(r), 0b11001u);
    EXPECT_THROW(s.write_signed(r, 16), std::invalid_argument);
    EXPECT_THROW(s.write_signed(r, -17), std::invalid_argument);
}

TEST(run_batch, matches_serial) {
    auto q = build_qfft(8, 4, 8);
    std::mt19937_64 rng(1);
    std::vector<BasisState> states;
    for (int i = 0; i < 64; i++) {
        states.push_back(encode(random_input(rng, 8, 4), q.layout));
    }
    EXPECT_EQ(run_batch(q.circuit, states), run_batch_serial(q.circuit, states));
    states.push_back(BasisState(3));
    EXPECT_THROW(run_batch(q.circuit, states), std::invalid_argument);
}

TEST(sparse_state, validation) {
    BasisState a = bits("01");
    BasisState b = bits("11");
    EXPECT_THROW(SparseState({}), std::invalid_argument);
    EXPECT_THROW(SparseState({{a, 1.0}, {b, 0.0}}), std::invalid_argument);
    EXPECT_THROW(SparseState({{a, 0.6}, {a, 0.8}}), std::invalid_argument);
    EXPECT_THROW(SparseState({{a, 0.6}, {bits("011"), 0.8}}), std::invalid_argument);
    EXPECT_THROW(SparseState({{a, 0.6}, {b, 0.6}}), std::invalid_argument);
    SparseState ok({{b, {0, 0.8}}, {a, 0.6}});
    EXPECT_EQ(ok.amplitude(a), Amplitude(0.6));
    EXPECT_EQ(ok.amplitude(bits("00")), Amplitude(0));
}

TEST(sparse_state, run_preserves_amplitudes) {
    auto c = build_qfft(4, 3, 4).circuit;
    auto l = build_qfft(4, 3, 4).layout;
    std::vector<std::int64_t> x{1, 2, 3, 4};
    auto sx = encode(x, l);
    auto single = run(c, SparseState::basis(sx));
    ASSERT_EQ(single.terms().size(), 1u);
    EXPECT_EQ(single.terms()[0].first, run_basis(c, sx));

    std::vector<std::int64_t> y{0, 7, 7, 0};
    auto sy = encode(y, l);
    SparseState in({{sx, 0.6}, {sy, 0.8}});
    auto out = run(c, in);
    ASSERT_EQ(out.terms().size(), 2u);
    EXPECT_EQ(out.amplitude(run_basis(c, sx)), Amplitude(0.6));
    EXPECT_EQ(out.amplitude(run_basis(c, sy)), Amplitude(0.8));
}

TEST(codec, placement_and_round_trip) {
    auto q = build_qfft(2, 2, 3);
    std::vector<std::int64_t> zero{0, 0};
    EXPECT_EQ(encode(zero, q.layout), BasisState(q.layout.num_qubits));
    std::vector<std::int64_t> x{3, 1};
    auto s = encode(x, q.layout);
    EXPECT_EQ(s.read_signed(q.layout.slots[0].real), 3 << 3);
    EXPECT_EQ(s.read_signed(q.layout.slots[1].real), 1 << 3);

    auto l8 = build_qfft(8, 4, 5).layout;
    std::mt19937_64 rng(3);
    auto d = random_input(rng, 8, 4);
    auto back = decode_data(encode(d, l8), l8);
    for (std::size_t p = 0; p < 8; p++) {
        EXPECT_EQ(back[p], std::complex<double>(static_cast<double>(d[p]), 0));
    }
    EXPECT_EQ(l8.slots[l8.input_slot[1]].real.name, "re4");

    std::vector<std::int64_t> bad{4, 0};
    EXPECT_THROW(encode(bad, q.layout), std::invalid_argument);
    std::vector<std::int64_t> neg{-1, 0};
    EXPECT_THROW(encode(neg, q.layout), std::invalid_argument);
    std::vector<std::int64_t> short_input{1};
    EXPECT_THROW(encode(short_input, q.layout), std::invalid_argument);
}

TEST(simulator, large_transform_is_fast) {
    auto q = build_qfft(8, 4, 12);
    std::mt19937_64 rng(4);
    auto s = encode(random_input(rng, 8, 4), q.layout);
    auto t0 = std::chrono::steady_clock::now();
    auto out = run_basis(q.circuit, s);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_LT(dt, 1.0);
    EXPECT_FALSE(out == s);
}

TEST(small_unitary, limits) {
    std::vector<TwoQubitOp> ops{{TwoQubitOp::Kind::CV, 0, 1}, {TwoQubitOp::Kind::CV_DG, 0, 1}};
    auto u = small_unitary(ops, 2);
    EXPECT_LT((u - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_THROW(small_unitary(ops, 5), std::invalid_argument);
    std::vector<TwoQubitOp> out_of_range{{TwoQubitOp::Kind::CNOT, 0, 3}};
    EXPECT_THROW(small_unitary(out_of_range, 2), std::invalid_argument);
}
