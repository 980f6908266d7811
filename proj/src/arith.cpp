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

#include "revfft/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace revfft {

FixedPointFormat::FixedPointFormat(std::size_t total_bits, std::size_t frac_bits)
    : total_bits(total_bits), frac_bits(frac_bits) {
    if (total_bits < 2 || total_bits > 62) {
        throw std::invalid_argument("word width must be in [2, 62], got " + std::to_string(total_bits));
    }
    if (frac_bits >= total_bits) {
        throw std::invalid_argument("fraction bits must be fewer than the word width");
    }
}

std::int64_t FixedPointFormat::min_raw() const {
    return -(std::int64_t{1} << (total_bits - 1));
}

std::int64_t FixedPointFormat::max_raw() const {
    return (std::int64_t{1} << (total_bits - 1)) - 1;
}

bool FixedPointFormat::contains(std::int64_t raw) const {
    return raw >= min_raw() && raw <= max_raw();
}

double FixedPointFormat::to_double(std::int64_t raw) const {
    return std::ldexp(static_cast<double>(raw), -static_cast<int>(frac_bits));
}

namespace {

void require_disjoint(const Register &a, const Register &b) {
    for (auto q : a.qubits) {
        if (std::find(b.qubits.begin(), b.qubits.end(), q) != b.qubits.end()) {
            throw std::invalid_argument(
                "registers '" + a.name + "' and '" + b.name + "' overlap on qubit " + std::to_string(q));
        }
    }
}

void require_same_width(const Register &a, const Register &b) {
    if (a.width() != b.width()) {
        throw std::invalid_argument(
            "registers '" + a.name + "' and '" + b.name + "' differ in width (" + std::to_string(a.width()) +
            " vs " + std::to_string(b.width()) + ")");
    }
}

void require_pool(std::span<const Qubit> ancilla, std::size_t needed, const char *what) {
    if (ancilla.size() < needed) {
        throw std::invalid_argument(
            std::string(what) + " needs " + std::to_string(needed) + " ancilla qubits, pool has " +
            std::to_string(ancilla.size()));
    }
}

void require_pool_disjoint(std::span<const Qubit> ancilla, std::size_t used, const Register &r) {
    for (std::size_t k = 0; k < used; k++) {
        if (std::find(r.qubits.begin(), r.qubits.end(), ancilla[k]) != r.qubits.end()) {
            throw std::invalid_argument("ancilla pool overlaps register '" + r.name + "'");
        }
    }
}

void complement(Circuit &c, const Register &r) {
    for (auto q : r.qubits) {
        c.append(Gate::x(q));
    }
}

// View of floor(a * 2^-p) (p > 0) or a * 2^|p| (p < 0) as a width-w word.
// Positive shifts read the sign-extension ancillas ext[0..p), negative ones
// read zero ancillas zeros[0..|p|).
Register shifted_view(const Register &a, int p, std::span<const Qubit> ext, std::span<const Qubit> zeros) {
    const std::size_t w = a.width();
    Register view{a.name + (p >= 0 ? ">>" : "<<") + std::to_string(std::abs(p)), {}};
    view.qubits.reserve(w);
    if (p >= 0) {
        auto s = static_cast<std::size_t>(p);
        view.qubits.insert(view.qubits.end(), a.qubits.begin() + static_cast<std::ptrdiff_t>(s), a.qubits.end());
        view.qubits.insert(view.qubits.end(), ext.begin(), ext.begin() + static_cast<std::ptrdiff_t>(s));
    } else {
        auto s = static_cast<std::size_t>(-p);
        view.qubits.insert(view.qubits.end(), zeros.begin(), zeros.begin() + static_cast<std::ptrdiff_t>(s));
        view.qubits.insert(view.qubits.end(), a.qubits.begin(), a.qubits.end() - static_cast<std::ptrdiff_t>(s));
    }
    return view;
}

}  // namespace

void emit_sign_extend(Circuit &c, const Register &src, const Register &extra) {
    require_disjoint(src, extra);
    for (auto q : extra.qubits) {
        c.append(Gate::cnot(src.sign(), q));
    }
}

void emit_adder(Circuit &c, const Register &a, const Register &b) {
    require_same_width(a, b);
    require_disjoint(a, b);
    const std::size_t n = a.width();
    if (n < 2) {
        throw std::invalid_argument("adder needs words of at least 2 bits");
    }
    // Six layers: n-1 CNOT, n-2 CNOT, n-1 TOFFOLI, 1 CNOT + n-1 PERES, n-2 CNOT, n-1 CNOT.
    // The carry into bit i+1 is accumulated on a[i+1] and uncomputed by the Peres layer.
    for (std::size_t i = 1; i < n; i++) {
        c.append(Gate::cnot(a[i], b[i]));
    }
    for (std::size_t i = n - 2; i >= 1; i--) {
        c.append(Gate::cnot(a[i], a[i + 1]));
    }
    for (std::size_t i = 0; i + 1 < n; i++) {
        c.append(Gate::toffoli(a[i], b[i], a[i + 1]));
    }
    c.append(Gate::cnot(a[n - 1], b[n - 1]));
    for (std::size_t i = n - 1; i-- > 0;) {
        c.append(Gate::peres(a[i], b[i], a[i + 1]));
    }
    for (std::size_t i = 1; i + 1 < n; i++) {
        c.append(Gate::cnot(a[i], a[i + 1]));
    }
    for (std::size_t i = 1; i < n; i++) {
        c.append(Gate::cnot(a[i], b[i]));
    }
}

void emit_subtractor(Circuit &c, const Register &a, const Register &b, SubtractVariant variant) {
    require_same_width(a, b);
    require_disjoint(a, b);
    if (variant == SubtractVariant::A_MINUS_B) {
        // ~(~a + b) = a - b
        complement(c, a);
        emit_adder(c, a, b);
        complement(c, a);
        complement(c, b);
    } else {
        // ~(a + ~b) = b - a
        complement(c, b);
        emit_adder(c, a, b);
        complement(c, b);
    }
}

std::size_t negate_ancilla_count(std::size_t w) {
    return w > 2 ? w - 2 : 0;
}

void emit_negate(Circuit &c, const Register &b, std::span<const Qubit> ancilla) {
    const std::size_t w = b.width();
    if (w < 2) {
        throw std::invalid_argument("negation needs words of at least 2 bits");
    }
    const std::size_t need = negate_ancilla_count(w);
    require_pool(ancilla, need, "negation");
    require_pool_disjoint(ancilla, need, b);

    complement(c, b);
    // carry(i) = b[0] & ... & b[i-1]; carry(1) is b[0] itself, carry(i) for
    // i >= 2 lives on ancilla[i-2].
    auto carry = [&](std::size_t i) -> Qubit {
        return i == 1 ? b[0] : ancilla[i - 2];
    };
    for (std::size_t i = 2; i < w; i++) {
        c.append(Gate::toffoli(carry(i - 1), b[i - 1], carry(i)));
    }
    for (std::size_t i = w - 1; i >= 1; i--) {
        c.append(Gate::cnot(carry(i), b[i]));
        if (i >= 2) {
            c.append(Gate::toffoli(carry(i - 1), b[i - 1], carry(i)));
        }
    }
    c.append(Gate::x(b[0]));
}

void emit_shift(Circuit &c, const Register &reg, std::size_t p, ShiftDirection dir) {
    const std::size_t w = reg.width();
    if (w < 2) {
        throw std::invalid_argument("shift needs words of at least 2 bits");
    }
    if (p >= w) {
        throw std::invalid_argument(
            "shift amount " + std::to_string(p) + " must be below the word width " + std::to_string(w));
    }
    Circuit left(c.num_qubits());
    for (std::size_t unit = 0; unit < p; unit++) {
        // Rotate bits 0..w-2 up by one; bit w-2 (a sign copy) lands on bit 0
        // and is cleared from the sign bit.
        for (std::size_t i = w - 2; i >= 1; i--) {
            left.append(Gate::swap(reg[i], reg[i - 1]));
        }
        left.append(Gate::cnot(reg[w - 1], reg[0]));
    }
    c.append(dir == ShiftDirection::LEFT ? left : invert(left));
}

std::int64_t right_shift_value(std::uint64_t bits, std::size_t w, std::size_t p) {
    const std::size_t kept = w - p - 1;
    std::uint64_t low = kept == 0 ? 0 : bits & ((std::uint64_t{1} << kept) - 1);
    bool negative = (bits >> (w - 1)) & 1;
    auto value = static_cast<std::int64_t>(low);
    if (negative) {
        value -= std::int64_t{1} << kept;
    }
    return value;
}

std::size_t mac_ancilla_count(std::span<const ShiftDigit> digits, std::size_t w) {
    std::size_t up = 0;
    std::size_t down = 0;
    for (const auto &d : digits) {
        if (d.shift > 0) {
            up = std::max(up, std::min(static_cast<std::size_t>(d.shift), w - 1));
        } else {
            down = std::max(down, static_cast<std::size_t>(-d.shift));
        }
    }
    return up + down;
}

void emit_shift_add(Circuit &c, const Register &a, const Register &b, int p, DigitSign sign,
                    std::span<const Qubit> ancilla) {
    const ShiftDigit digit{p, sign};
    emit_const_mac(c, a, b, std::span<const ShiftDigit>(&digit, 1), ancilla);
}

void emit_const_mac(Circuit &c, const Register &a, const Register &b, std::span<const ShiftDigit> digits,
                    std::span<const Qubit> ancilla) {
    require_same_width(a, b);
    require_disjoint(a, b);
    const std::size_t w = a.width();
    for (const auto &d : digits) {
        if (d.shift < 0 && static_cast<std::size_t>(-d.shift) >= w) {
            throw std::invalid_argument(
                "shift " + std::to_string(d.shift) + " out of range for a " + std::to_string(w) + "-bit word");
        }
    }
    const std::size_t need = mac_ancilla_count(digits, w);
    require_pool(ancilla, need, "shift-and-add");
    require_pool_disjoint(ancilla, need, a);
    require_pool_disjoint(ancilla, need, b);

    // floor(a / 2^p) is pure sign fill once p >= w - 1.
    const int top = static_cast<int>(w) - 1;
    std::size_t up = 0;
    for (const auto &d : digits) {
        if (d.shift > 0) {
            up = std::max(up, static_cast<std::size_t>(std::min(d.shift, top)));
        }
    }
    auto ext = ancilla.subspan(0, up);
    auto zeros = ancilla.subspan(up);

    for (auto q : ext) {
        c.append(Gate::cnot(a.sign(), q));
    }
    bool complemented = false;
    for (const auto &d : digits) {
        bool want = d.sign == DigitSign::SUB;
        if (want != complemented) {
            complement(c, b);
            complemented = want;
        }
        emit_adder(c, shifted_view(a, std::min(d.shift, top), ext, zeros), b);
    }
    if (complemented) {
        complement(c, b);
    }
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
        c.append(Gate::cnot(a.sign(), *it));
    }
}

namespace {

Circuit two_words(std::size_t w, std::size_t ancilla) {
    Circuit c(2 * w + ancilla);
    c.add_register(make_register("a", 0, w));
    c.add_register(make_register("b", static_cast<Qubit>(w), w));
    if (ancilla > 0) {
        c.add_register(make_register("anc", static_cast<Qubit>(2 * w), ancilla));
    }
    return c;
}

std::span<const Qubit> pool_of(const Circuit &c) {
    if (!c.has_register("anc")) {
        return {};
    }
    return c.register_named("anc").qubits;
}

}  // namespace

Circuit build_sign_extend(std::size_t w, std::size_t extra) {
    Circuit c(w + extra);
    c.add_register(make_register("a", 0, w));
    if (extra > 0) {
        c.add_register(make_register("ext", static_cast<Qubit>(w), extra));
        emit_sign_extend(c, c.register_named("a"), c.register_named("ext"));
    }
    return c;
}

Circuit build_adder(std::size_t w) {
    Circuit c = two_words(w, 0);
    emit_adder(c, c.register_named("a"), c.register_named("b"));
    return c;
}

Circuit build_subtractor(std::size_t w, SubtractVariant variant) {
    Circuit c = two_words(w, 0);
    emit_subtractor(c, c.register_named("a"), c.register_named("b"), variant);
    return c;
}

Circuit build_negate(std::size_t w) {
    const std::size_t anc = negate_ancilla_count(w);
    Circuit c(w + anc);
    c.add_register(make_register("b", 0, w));
    if (anc > 0) {
        c.add_register(make_register("anc", static_cast<Qubit>(w), anc));
    }
    emit_negate(c, c.register_named("b"), pool_of(c));
    return c;
}

Circuit build_shift(std::size_t w, std::size_t p, ShiftDirection dir) {
    Circuit c(w);
    c.add_register(make_register("a", 0, w));
    emit_shift(c, c.register_named("a"), p, dir);
    return c;
}

Circuit build_shift_add(std::size_t w, int p, DigitSign sign) {
    const ShiftDigit digit{p, sign};
    Circuit c = two_words(w, mac_ancilla_count(std::span<const ShiftDigit>(&digit, 1), w));
    emit_shift_add(c, c.register_named("a"), c.register_named("b"), p, sign, pool_of(c));
    return c;
}

Circuit build_const_mac(std::size_t w, std::span<const ShiftDigit> digits) {
    Circuit c = two_words(w, mac_ancilla_count(digits, w));
    emit_const_mac(c, c.register_named("a"), c.register_named("b"), digits, pool_of(c));
    return c;
}

}  // namespace revfft
