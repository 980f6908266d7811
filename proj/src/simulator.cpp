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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace revfft {

BasisState::BasisState(std::size_t num_qubits) : num_qubits_(num_qubits), words_((num_qubits + 63) / 64, 0) {
}

std::uint64_t BasisState::read_bits(const Register &reg) const {
    if (reg.width() > 64) {
        throw std::invalid_argument("register '" + reg.name + "' is wider than 64 bits");
    }
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < reg.width(); k++) {
        out |= static_cast<std::uint64_t>(get(reg[k])) << k;
    }
    return out;
}

void BasisState::write_bits(const Register &reg, std::uint64_t bits) {
    if (reg.width() > 64) {
        throw std::invalid_argument("register '" + reg.name + "' is wider than 64 bits");
    }
    for (std::size_t k = 0; k < reg.width(); k++) {
        set(reg[k], (bits >> k) & 1);
    }
}

std::int64_t BasisState::read_signed(const Register &reg) const {
    const std::size_t w = reg.width();
    if (w > 63) {
        throw std::invalid_argument("register '" + reg.name + "' is wider than 63 bits");
    }
    auto bits = read_bits(reg);
    if ((bits >> (w - 1)) & 1) {
        return static_cast<std::int64_t>(bits) - (std::int64_t{1} << w);
    }
    return static_cast<std::int64_t>(bits);
}

void BasisState::write_signed(const Register &reg, std::int64_t value) {
    const std::size_t w = reg.width();
    if (w > 63) {
        throw std::invalid_argument("register '" + reg.name + "' is wider than 63 bits");
    }
    std::int64_t lo = -(std::int64_t{1} << (w - 1));
    std::int64_t hi = (std::int64_t{1} << (w - 1)) - 1;
    if (value < lo || value > hi) {
        throw std::invalid_argument(
            "value " + std::to_string(value) + " does not fit register '" + reg.name + "'");
    }
    write_bits(reg, static_cast<std::uint64_t>(value) & ((std::uint64_t{1} << w) - 1));
}

bool BasisState::is_zero(const Register &reg) const {
    return std::none_of(reg.qubits.begin(), reg.qubits.end(), [&](Qubit q) {
        return get(q);
    });
}

std::string BasisState::str() const {
    std::string out(num_qubits_, '0');
    for (std::size_t q = 0; q < num_qubits_; q++) {
        if (get(static_cast<Qubit>(q))) {
            out[q] = '1';
        }
    }
    return out;
}

void apply_gate(const Gate &gate, BasisState &state) {
    const auto &q = gate.qubits;
    switch (gate.kind) {
        case GateKind::X:
            state.flip(q[0]);
            break;
        case GateKind::CNOT:
            if (state.get(q[0])) {
                state.flip(q[1]);
            }
            break;
        case GateKind::SWAP: {
            bool a = state.get(q[0]);
            bool b = state.get(q[1]);
            if (a != b) {
                state.set(q[0], b);
                state.set(q[1], a);
            }
            break;
        }
        case GateKind::TOFFOLI:
            if (state.get(q[0]) && state.get(q[1])) {
                state.flip(q[2]);
            }
            break;
        case GateKind::PERES:
            if (state.get(q[0])) {
                if (state.get(q[1])) {
                    state.flip(q[2]);
                }
                state.flip(q[1]);
            }
            break;
        case GateKind::PERES_DG:
            if (state.get(q[0])) {
                state.flip(q[1]);
                if (state.get(q[1])) {
                    state.flip(q[2]);
                }
            }
            break;
    }
}

BasisState run_basis(const Circuit &circuit, BasisState state) {
    if (state.size() != circuit.num_qubits()) {
        throw std::invalid_argument(
            "state has " + std::to_string(state.size()) + " qubits but the circuit has " +
            std::to_string(circuit.num_qubits()));
    }
    for (const auto &g : circuit.gates()) {
        apply_gate(g, state);
    }
    return state;
}

std::vector<BasisState> run_batch_serial(const Circuit &circuit, std::vector<BasisState> states) {
    for (auto &s : states) {
        s = run_basis(circuit, std::move(s));
    }
    return states;
}

std::vector<BasisState> run_batch(const Circuit &circuit, std::vector<BasisState> states) {
    for (const auto &s : states) {
        if (s.size() != circuit.num_qubits()) {
            throw std::invalid_argument("state size does not match the circuit");
        }
    }
    const auto n = static_cast<std::ptrdiff_t>(states.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; i++) {
        auto &s = states[static_cast<std::size_t>(i)];
        for (const auto &g : circuit.gates()) {
            apply_gate(g, s);
        }
    }
    return states;
}

SparseState::SparseState(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw std::invalid_argument("a state needs at least one term");
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) {
        return a.first < b.first;
    });
    double norm = 0;
    for (std::size_t i = 0; i < terms_.size(); i++) {
        if (terms_[i].second == Amplitude{}) {
            throw std::invalid_argument("zero amplitude in a sparse state");
        }
        if (terms_[i].first.size() != terms_[0].first.size()) {
            throw std::invalid_argument("sparse state terms differ in qubit count");
        }
        if (i > 0 && terms_[i].first == terms_[i - 1].first) {
            throw std::invalid_argument("repeated basis state in a sparse state");
        }
        norm += std::norm(terms_[i].second);
    }
    if (std::abs(norm - 1.0) > 1e-9) {
        throw std::invalid_argument("sparse state is not normalised (norm^2 = " + std::to_string(norm) + ")");
    }
}

SparseState SparseState::basis(BasisState state) {
    return SparseState({{std::move(state), Amplitude{1.0, 0.0}}});
}

Amplitude SparseState::amplitude(const BasisState &state) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), state, [](const Term &t, const BasisState &s) {
        return t.first < s;
    });
    if (it != terms_.end() && it->first == state) {
        return it->second;
    }
    return {};
}

SparseState run(const Circuit &circuit, const SparseState &state) {
    std::vector<BasisState> inputs;
    inputs.reserve(state.terms().size());
    for (const auto &t : state.terms()) {
        inputs.push_back(t.first);
    }
    auto outputs = run_batch(circuit, std::move(inputs));
    std::vector<SparseState::Term> terms;
    terms.reserve(outputs.size());
    for (std::size_t i = 0; i < outputs.size(); i++) {
        terms.emplace_back(std::move(outputs[i]), state.terms()[i].second);
    }
    return SparseState(std::move(terms));
}

Eigen::Matrix2cd v_matrix() {
    using C = std::complex<double>;
    Eigen::Matrix2cd v;
    v << C{1, 0}, C{0, -1}, C{0, -1}, C{1, 0};
    return C{0.5, 0.5} * v;
}

namespace {

Eigen::MatrixXcd controlled(const Eigen::Matrix2cd &u, unsigned control, unsigned target, unsigned num_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; col++) {
        if (!((col >> control) & 1)) {
            m(col, col) = 1;
            continue;
        }
        int bit = static_cast<int>((col >> target) & 1);
        Eigen::Index base = col & ~(Eigen::Index{1} << target);
        for (int out = 0; out < 2; out++) {
            m(base | (Eigen::Index{out} << target), col) = u(out, bit);
        }
    }
    return m;
}

}  // namespace

Eigen::MatrixXcd small_unitary(std::span<const TwoQubitOp> ops, unsigned num_qubits) {
    if (num_qubits == 0 || num_qubits > 4) {
        throw std::invalid_argument("small_unitary supports 1 to 4 qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    const Eigen::Matrix2cd v = v_matrix();
    const Eigen::Matrix2cd vdg = v.adjoint();
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &op : ops) {
        if (op.control >= num_qubits || op.target >= num_qubits || op.control == op.target) {
            throw std::invalid_argument("two-qubit op outside the local qubit range");
        }
        const Eigen::Matrix2cd &u =
            op.kind == TwoQubitOp::Kind::CNOT ? x : (op.kind == TwoQubitOp::Kind::CV ? v : vdg);
        total = controlled(u, op.control, op.target, num_qubits) * total;
    }
    return total;
}

Eigen::MatrixXcd permutation_matrix(GateKind kind) {
    const auto n = static_cast<unsigned>(arity(kind));
    const Eigen::Index dim = Eigen::Index{1} << n;
    Gate g{kind, {0, 1, 2}};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; col++) {
        BasisState s(n);
        for (unsigned k = 0; k < n; k++) {
            s.set(k, (col >> k) & 1);
        }
        apply_gate(g, s);
        Eigen::Index row = 0;
        for (unsigned k = 0; k < n; k++) {
            row |= Eigen::Index{s.get(k)} << k;
        }
        m(row, col) = 1;
    }
    return m;
}

}  // namespace revfft
