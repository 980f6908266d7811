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


#include "revfft/qfft.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace revfft {

using nlohmann::json;

namespace {

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

std::size_t log2_exact(std::size_t n) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
        bits++;
    }
    return bits;
}

json register_json(const Register &r) {
    return r.qubits;
}

std::vector<json> slots_json(const std::vector<SlotRegisters> &slots) {
    std::vector<json> out;
    for (const auto &s : slots) {
        out.push_back({{"real", register_json(s.real)}, {"imag", register_json(s.imag)}});
    }
    return out;
}

std::vector<SlotRegisters> slots_from_json(const json &arr, const std::string &prefix) {
    std::vector<SlotRegisters> out;
    std::size_t j = 0;
    for (const auto &s : arr) {
        out.push_back({Register{prefix + "re" + std::to_string(j), s.at("real").get<std::vector<Qubit>>()},
                       Register{prefix + "im" + std::to_string(j), s.at("imag").get<std::vector<Qubit>>()}});
        j++;
    }
    return out;
}

std::vector<SlotRegisters> make_bank(std::size_t N, std::size_t w, Qubit first, const std::string &prefix) {
    std::vector<SlotRegisters> bank;
    for (std::size_t j = 0; j < N; j++) {
        auto base = static_cast<Qubit>(first + 2 * j * w);
        bank.push_back({make_register(prefix + "re" + std::to_string(j), base, w),
                        make_register(prefix + "im" + std::to_string(j), static_cast<Qubit>(base + w), w)});
    }
    return bank;
}

void add_layout_registers(Circuit &c, const RegisterLayout &layout) {
    for (const auto *bank : {&layout.slots, &layout.aux_slots}) {
        for (const auto &s : *bank) {
            c.add_register(s.real);
            c.add_register(s.imag);
        }
    }
    if (!layout.ancilla.empty()) {
        c.add_register(Register{"anc", layout.ancilla});
    }
}

void require_slot_pair(const SlotRegisters &a, const SlotRegisters &b) {
    std::vector<Qubit> all;
    for (const auto *r : {&a.real, &a.imag, &b.real, &b.imag}) {
        if (r->width() != a.real.width()) {
            throw std::invalid_argument("butterfly slots differ in word width");
        }
        all.insert(all.end(), r->qubits.begin(), r->qubits.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("butterfly slots overlap");
    }
}

std::vector<Qubit> qubit_range(Qubit first, std::size_t n) {
    std::vector<Qubit> out(n);
    for (std::size_t i = 0; i < n; i++) {
        out[i] = static_cast<Qubit>(first + i);
    }
    return out;
}

// Two slots plus a pool, for the standalone builders.
Circuit two_slot_circuit(std::size_t w, std::size_t pool) {
    Circuit c(4 * w + pool);
    auto bank = make_bank(2, w, 0, "");
    for (const auto &s : bank) {
        c.add_register(s.real);
        c.add_register(s.imag);
    }
    if (pool > 0) {
        c.add_register(Register{"anc", qubit_range(static_cast<Qubit>(4 * w), pool)});
    }
    return c;
}

SlotRegisters slot_of(const Circuit &c, int j) {
    return {c.register_named("re" + std::to_string(j)), c.register_named("im" + std::to_string(j))};
}

std::vector<Qubit> pool_of(const Circuit &c) {
    return c.has_register("anc") ? c.register_named("anc").qubits : std::vector<Qubit>{};
}

}  // namespace

std::size_t RegisterLayout::log2N() const {
    return log2_exact(N);
}

json RegisterLayout::to_json() const {
    json doc;
    doc["N"] = N;
    doc["m"] = m;
    doc["A"] = A;
    doc["w"] = w;
    doc["frac_bits"] = frac_bits;
    doc["guard_bits"] = guard_bits;
    doc["slots"] = slots_json(slots);
    if (!aux_slots.empty()) {
        doc["aux_slots"] = slots_json(aux_slots);
    }
    doc["ancilla"] = ancilla;
    doc["input_order"] = input_slot;
    doc["num_qubits"] = num_qubits;
    return doc;
}

RegisterLayout RegisterLayout::from_json(const json &doc) {
    RegisterLayout l;
    try {
        l.N = doc.at("N").get<std::size_t>();
        l.m = doc.at("m").get<std::size_t>();
        l.A = doc.at("A").get<std::size_t>();
        l.w = doc.at("w").get<std::size_t>();
        l.frac_bits = doc.at("frac_bits").get<std::size_t>();
        l.guard_bits = doc.value("guard_bits", std::size_t{0});
        l.slots = slots_from_json(doc.at("slots"), "");
        if (doc.contains("aux_slots")) {
            l.aux_slots = slots_from_json(doc.at("aux_slots"), "aux_");
        }
        l.ancilla = doc.at("ancilla").get<std::vector<Qubit>>();
        l.input_slot = doc.at("input_order").get<std::vector<std::size_t>>();
        l.num_qubits = doc.at("num_qubits").get<std::size_t>();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed layout: ") + e.what());
    }
    if (l.slots.size() != l.N || l.input_slot.size() != l.N) {
        throw std::invalid_argument("layout slot count does not match N");
    }
    return l;
}

bool RegisterLayout::operator==(const RegisterLayout &other) const {
    return to_json() == other.to_json();
}

std::size_t bit_reverse(std::size_t index, std::size_t bits) {
    std::size_t out = 0;
    for (std::size_t b = 0; b < bits; b++) {
        out = (out << 1) | ((index >> b) & 1);
    }
    return out;
}

std::size_t qfft_word_width(std::size_t N, std::size_t m, std::size_t A) {
    return m + log2_exact(N) + A + 1;
}

void validate_qfft_params(std::size_t N, std::size_t m, std::size_t A) {
    if (N < 2 || !is_power_of_two(N)) {
        throw std::invalid_argument("N must be a power of two (at least 2), got " + std::to_string(N));
    }
    if (m < 1) {
        throw std::invalid_argument("input width m must be at least 1");
    }
    if (A < 1) {
        throw std::invalid_argument("accuracy A must be at least 1");
    }
    if (qfft_word_width(N, m, A) > 62) {
        throw std::invalid_argument("word width m + log2 N + A + 1 exceeds 62 bits");
    }
}

RegisterLayout make_layout(std::size_t N, std::size_t m, std::size_t A, std::size_t w, bool aux_bank) {
    validate_qfft_params(N, m, A);
    if (w < qfft_word_width(N, m, A) || w > 62) {
        throw std::invalid_argument("word width " + std::to_string(w) + " is outside the supported range");
    }
    RegisterLayout l;
    l.N = N;
    l.m = m;
    l.A = A;
    l.w = w;
    l.frac_bits = A;
    l.slots = make_bank(N, w, 0, "");
    Qubit next = static_cast<Qubit>(2 * N * w);
    if (aux_bank) {
        l.aux_slots = make_bank(N, w, next, "aux_");
        next = static_cast<Qubit>(next + 2 * N * w);
    }
    l.ancilla = qubit_range(next, qfft_ancilla_count(N, A, w));
    l.num_qubits = next + l.ancilla.size();
    const std::size_t n = log2_exact(N);
    for (std::size_t p = 0; p < N; p++) {
        l.input_slot.push_back(bit_reverse(p, n));
    }
    return l;
}

int RotationPlan::max_shift() const {
    int best = 0;
    for (const auto *list : {&outer_digits, &inner_digits}) {
        for (const auto &d : *list) {
            best = std::max(best, d.shift);
        }
    }
    return best;
}

std::int64_t quantize_coefficient(double c, std::size_t A) {
    const double x = std::ldexp(std::abs(c), static_cast<int>(A));
    double q = std::floor(x);
    if (x - q > 0.5) {
        q += 1;
    }
    auto mag = static_cast<std::int64_t>(q);
    return c < 0 ? -mag : mag;
}

std::vector<ShiftDigit> coefficient_digits(std::int64_t q, std::size_t A) {
    const std::int64_t mag = q < 0 ? -q : q;
    if (mag > (std::int64_t{1} << A)) {
        throw std::invalid_argument("coefficient magnitude exceeds 1");
    }
    const DigitSign sign = q < 0 ? DigitSign::SUB : DigitSign::ADD;
    std::vector<ShiftDigit> out;
    for (std::size_t shift = 0; shift <= A; shift++) {
        if ((mag >> (A - shift)) & 1) {
            out.push_back({static_cast<int>(shift), sign});
        }
    }
    return out;
}

RotationPlan plan_rotation(std::size_t k, std::size_t N, std::size_t A) {
    if (N < 2 || !is_power_of_two(N)) {
        throw std::invalid_argument("N must be a power of two (at least 2)");
    }
    if (k >= N / 2) {
        throw std::invalid_argument("twiddle index " + std::to_string(k) + " out of range for N = " + std::to_string(N));
    }
    if (A < 1) {
        throw std::invalid_argument("accuracy A must be at least 1");
    }
    RotationPlan p;
    p.k = k;
    p.N = N;
    p.A = A;
    p.theta = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N);
    if (k == 0) {
        return p;
    }
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    if (4 * k <= N) {
        p.branch = RotationBranch::UP;
        p.outer = (c - 1) / s;
    } else {
        p.branch = RotationBranch::DOWN;
        p.outer = (c + 1) / s;
    }
    p.inner = s;
    p.outer_q = quantize_coefficient(p.outer, A);
    p.inner_q = quantize_coefficient(p.inner, A);
    p.outer_digits = coefficient_digits(p.outer_q, A);
    p.inner_digits = coefficient_digits(p.inner_q, A);
    return p;
}

std::vector<ShiftDigit> negated(std::vector<ShiftDigit> digits) {
    for (auto &d : digits) {
        d.sign = d.sign == DigitSign::ADD ? DigitSign::SUB : DigitSign::ADD;
    }
    return digits;
}

void emit_rotation(Circuit &c, const SlotRegisters &slot, const RotationPlan &plan, std::span<const Qubit> ancilla) {
    const auto &re = slot.real;
    const auto &im = slot.imag;
    switch (plan.branch) {
        case RotationBranch::IDENTITY:
            return;
        case RotationBranch::UP:
            emit_const_mac(c, im, re, plan.outer_digits, ancilla);
            emit_const_mac(c, re, im, plan.inner_digits, ancilla);
            emit_const_mac(c, im, re, plan.outer_digits, ancilla);
            return;
        case RotationBranch::DOWN:
            emit_const_mac(c, im, re, plan.outer_digits, ancilla);
            emit_const_mac(c, re, im, negated(plan.inner_digits), ancilla);
            emit_negate(c, im, ancilla);
            emit_negate(c, re, ancilla);
            emit_const_mac(c, im, re, plan.outer_digits, ancilla);
            return;
    }
}

void emit_butterfly_sum_diff(Circuit &c, const SlotRegisters &a, const SlotRegisters &b) {
    require_slot_pair(a, b);
    for (auto part : {&SlotRegisters::real, &SlotRegisters::imag}) {
        const Register &x = a.*part;
        const Register &y = b.*part;
        emit_adder(c, y, x);
        emit_shift(c, y, 1, ShiftDirection::LEFT);
        emit_subtractor(c, x, y, SubtractVariant::A_MINUS_B);
    }
}

void emit_butterfly(Circuit &c, const SlotRegisters &a, const SlotRegisters &b, const RotationPlan &plan,
                    std::span<const Qubit> ancilla) {
    require_slot_pair(a, b);
    emit_rotation(c, b, plan, ancilla);
    emit_butterfly_sum_diff(c, a, b);
}

namespace {

std::size_t rotation_pool(std::size_t w, const RotationPlan &plan) {
    std::size_t pool = static_cast<std::size_t>(plan.max_shift());
    if (plan.branch == RotationBranch::DOWN) {
        pool = std::max(pool, negate_ancilla_count(w));
    }
    return pool;
}

}  // namespace

Circuit build_rotation(std::size_t w, const RotationPlan &plan) {
    Circuit c = two_slot_circuit(w, rotation_pool(w, plan));
    emit_rotation(c, slot_of(c, 0), plan, pool_of(c));
    return c;
}

Circuit build_butterfly_sum_diff(std::size_t w) {
    Circuit c = two_slot_circuit(w, 0);
    emit_butterfly_sum_diff(c, slot_of(c, 0), slot_of(c, 1));
    return c;
}

Circuit build_butterfly(std::size_t w, std::size_t k, std::size_t N, std::size_t A) {
    auto plan = plan_rotation(k, N, A);
    Circuit c = two_slot_circuit(w, rotation_pool(w, plan));
    emit_butterfly(c, slot_of(c, 0), slot_of(c, 1), plan, pool_of(c));
    return c;
}

std::size_t qfft_ancilla_count(std::size_t N, std::size_t A, std::size_t w) {
    // Digit shifts never exceed A; DOWN rotations appear once N >= 8.
    std::size_t pool = A;
    if (N >= 8) {
        pool = std::max(pool, negate_ancilla_count(w));
    }
    return pool;
}

void emit_qfft_network(Circuit &c, std::span<const SlotRegisters> slots, std::size_t A,
                       std::span<const Qubit> ancilla) {
    const std::size_t N = slots.size();
    if (N < 2 || !is_power_of_two(N)) {
        throw std::invalid_argument("N must be a power of two (at least 2)");
    }
    std::map<std::size_t, RotationPlan> plans;
    for (std::size_t span = 2; span <= N; span *= 2) {
        const std::size_t half = span / 2;
        for (std::size_t k0 = 0; k0 < N; k0 += span) {
            for (std::size_t j = 0; j < half; j++) {
                const std::size_t k = j * (N / span);
                auto it = plans.find(k);
                if (it == plans.end()) {
                    it = plans.emplace(k, plan_rotation(k, N, A)).first;
                }
                emit_butterfly(c, slots[k0 + j], slots[k0 + j + half], it->second, ancilla);
            }
        }
    }
}

namespace {

json base_metadata(const RegisterLayout &layout, const char *kind) {
    json meta = layout.to_json();
    meta["kind"] = kind;
    meta["butterflies"] = layout.N / 2 * layout.log2N();
    return meta;
}

}  // namespace

QfftCircuit build_qfft(std::size_t N, std::size_t m, std::size_t A) {
    validate_qfft_params(N, m, A);
    QfftCircuit out{Circuit{}, make_layout(N, m, A, qfft_word_width(N, m, A))};
    out.circuit = Circuit(out.layout.num_qubits);
    add_layout_registers(out.circuit, out.layout);
    emit_qfft_network(out.circuit, out.layout.slots, A, out.layout.ancilla);
    out.circuit.metadata() = base_metadata(out.layout, "qfft");
    return out;
}

QfftCircuit build_iqfft(std::size_t N, std::size_t m, std::size_t A) {
    auto fwd = build_qfft(N, m, A);
    QfftCircuit out{invert(fwd.circuit), fwd.layout};
    out.circuit.metadata()["kind"] = "iqfft";
    return out;
}

std::size_t filter_guard_bits(std::size_t N, std::size_t A) {
    validate_qfft_params(N, 1, A);
    std::size_t g = 0;
    for (std::size_t span = 2; span <= N; span *= 2) {
        int p = 0;
        for (std::size_t j = 0; j < span / 2; j++) {
            p = std::max(p, plan_rotation(j * (N / span), N, A).max_shift());
        }
        g += 1 + 3 * static_cast<std::size_t>(p);
    }
    return g;
}

QfftCircuit build_filter(std::size_t N, std::size_t m, std::size_t A, std::size_t cutoff) {
    validate_qfft_params(N, m, A);
    if (cutoff < 1 || cutoff > N) {
        throw std::invalid_argument("cutoff must be in [1, N], got " + std::to_string(cutoff));
    }
    const std::size_t g = filter_guard_bits(N, A);
    const std::size_t w = qfft_word_width(N, m, A) + g;
    if (w > 62) {
        throw std::invalid_argument(
            "filter needs " + std::to_string(w) + "-bit words (" + std::to_string(g) +
            " guard bits); the limit is 62");
    }
    QfftCircuit out{Circuit{}, make_layout(N, m, A, w, true)};
    auto &layout = out.layout;
    layout.guard_bits = g;
    layout.frac_bits = A + g;
    Circuit &c = out.circuit;
    c = Circuit(layout.num_qubits);
    add_layout_registers(c, layout);

    Circuit data_fwd(layout.num_qubits);
    emit_qfft_network(data_fwd, layout.slots, A, layout.ancilla);
    Circuit aux_fwd(layout.num_qubits);
    emit_qfft_network(aux_fwd, layout.aux_slots, A, layout.ancilla);

    c.append(data_fwd);
    for (const auto &s : layout.slots) {
        emit_shift(c, s.real, g, ShiftDirection::LEFT);
        emit_shift(c, s.imag, g, ShiftDirection::LEFT);
    }
    for (std::size_t k = cutoff; k < N; k++) {
        for (auto part : {&SlotRegisters::real, &SlotRegisters::imag}) {
            const Register &d = layout.slots[k].*part;
            const Register &x = layout.aux_slots[k].*part;
            for (std::size_t i = 0; i < w; i++) {
                c.append(Gate::swap(d[i], x[i]));
            }
        }
    }
    c.append(invert(data_fwd));
    c.append(invert(aux_fwd));

    json meta = base_metadata(layout, "filter");
    meta["cutoff"] = cutoff;
    meta["butterflies"] = 3 * (N / 2) * layout.log2N();
    c.metadata() = std::move(meta);
    return out;
}

std::size_t qfft_count_bound(std::size_t N, std::size_t A, std::size_t w) {
    return (32 * w - 33 + A * (45 * w - 42)) * (N / 2) * log2_exact(N);
}

}  // namespace revfft
