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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "revfft/qfft.hpp"

namespace revfft {

namespace {

class WordArith {
   public:
    explicit WordArith(std::size_t w) : w_(w) {
        if (w < 2 || w > 62) {
            throw std::invalid_argument("oracle word width must be in [2, 62]");
        }
    }

    bool overflow = false;
    bool inexact = false;

    std::int64_t fit(__int128 v) {
        const __int128 half = __int128{1} << (w_ - 1);
        if (v < -half || v >= half) {
            overflow = true;
            const __int128 mod = half * 2;
            v %= mod;
            if (v < 0) {
                v += mod;
            }
            if (v >= half) {
                v -= mod;
            }
        }
        return static_cast<std::int64_t>(v);
    }

    std::int64_t add(std::int64_t a, std::int64_t b) {
        return fit(__int128{a} + b);
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) {
        return fit(__int128{a} - b);
    }
    std::int64_t neg(std::int64_t a) {
        return fit(-__int128{a});
    }

    std::int64_t shear(std::int64_t target, std::int64_t source, std::span<const ShiftDigit> digits) {
        for (const auto &d : digits) {
            __int128 term = d.shift >= 0 ? __int128{source >> d.shift} : __int128{source} << -d.shift;
            target = fit(__int128{target} + static_cast<int>(d.sign) * term);
        }
        return target;
    }

    // Unit LEFT shift as the circuit permutes bits: low w-2 bits move up one,
    // bit w-2 wraps to bit 0 and is XORed with the sign.
    std::int64_t left_unit(std::int64_t v) {
        std::uint64_t x = to_bits(v);
        std::uint64_t s = (x >> (w_ - 1)) & 1;
        std::uint64_t b = (x >> (w_ - 2)) & 1;
        if (s != b) {
            overflow = true;
        }
        std::uint64_t body = (x << 1) & low_mask(w_ - 1);
        return from_bits((s << (w_ - 1)) | body | (b ^ s));
    }

    std::int64_t right_unit(std::int64_t v) {
        std::uint64_t y = to_bits(v);
        std::uint64_t s = (y >> (w_ - 1)) & 1;
        std::uint64_t b0 = y & 1;
        if (b0 != 0) {
            inexact = true;
        }
        std::uint64_t body = (y >> 1) & low_mask(w_ - 2);
        return from_bits((s << (w_ - 1)) | ((b0 ^ s) << (w_ - 2)) | body);
    }

   private:
    static std::uint64_t low_mask(std::size_t n) {
        return (std::uint64_t{1} << n) - 1;
    }
    std::uint64_t to_bits(std::int64_t v) const {
        return static_cast<std::uint64_t>(v) & low_mask(w_);
    }
    std::int64_t from_bits(std::uint64_t x) const {
        if ((x >> (w_ - 1)) & 1) {
            return static_cast<std::int64_t>(x) - (std::int64_t{1} << w_);
        }
        return static_cast<std::int64_t>(x);
    }

    std::size_t w_;
};

std::vector<ShiftDigit> flip(std::vector<ShiftDigit> digits) {
    for (auto &d : digits) {
        d.sign = d.sign == DigitSign::ADD ? DigitSign::SUB : DigitSign::ADD;
    }
    return digits;
}

void rotate_forward(WordArith &ar, FixedComplex &z, const RotationPlan &plan) {
    switch (plan.branch) {
        case RotationBranch::IDENTITY:
            break;
        case RotationBranch::UP:
            z.re = ar.shear(z.re, z.im, plan.outer_digits);
            z.im = ar.shear(z.im, z.re, plan.inner_digits);
            z.re = ar.shear(z.re, z.im, plan.outer_digits);
            break;
        case RotationBranch::DOWN:
            z.re = ar.shear(z.re, z.im, plan.outer_digits);
            z.im = ar.shear(z.im, z.re, flip(plan.inner_digits));
            z.im = ar.neg(z.im);
            z.re = ar.neg(z.re);
            z.re = ar.shear(z.re, z.im, plan.outer_digits);
            break;
    }
}

void rotate_backward(WordArith &ar, FixedComplex &z, const RotationPlan &plan) {
    switch (plan.branch) {
        case RotationBranch::IDENTITY:
            break;
        case RotationBranch::UP:
            z.re = ar.shear(z.re, z.im, flip(plan.outer_digits));
            z.im = ar.shear(z.im, z.re, flip(plan.inner_digits));
            z.re = ar.shear(z.re, z.im, flip(plan.outer_digits));
            break;
        case RotationBranch::DOWN:
            z.re = ar.shear(z.re, z.im, flip(plan.outer_digits));
            z.re = ar.neg(z.re);
            z.im = ar.neg(z.im);
            z.im = ar.shear(z.im, z.re, plan.inner_digits);
            z.re = ar.shear(z.re, z.im, flip(plan.outer_digits));
            break;
    }
}

void sum_diff_forward(WordArith &ar, std::int64_t &a, std::int64_t &b) {
    a = ar.add(a, b);
    b = ar.left_unit(b);
    b = ar.sub(a, b);
}

void sum_diff_backward(WordArith &ar, std::int64_t &a, std::int64_t &b) {
    b = ar.sub(a, b);
    b = ar.right_unit(b);
    a = ar.sub(a, b);
}

std::size_t checked_log2(std::size_t N) {
    if (N < 2 || (N & (N - 1)) != 0) {
        throw std::invalid_argument("N must be a power of two (at least 2)");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) != N) {
        n++;
    }
    return n;
}

std::size_t reverse_bits(std::size_t v, std::size_t n) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; i++) {
        if (v & (std::size_t{1} << i)) {
            r |= std::size_t{1} << (n - 1 - i);
        }
    }
    return r;
}

OracleResult finish(std::vector<FixedComplex> slots, const WordArith &ar) {
    return {std::move(slots), ar.overflow, ar.inexact};
}

}  // namespace

std::int64_t oracle_shear(std::int64_t target, std::int64_t source, std::span<const ShiftDigit> digits,
                          std::size_t w, bool &overflow) {
    WordArith ar(w);
    auto out = ar.shear(target, source, digits);
    overflow = overflow || ar.overflow;
    return out;
}

OracleResult oracle_qfft_words(std::vector<FixedComplex> x, std::size_t A, std::size_t w) {
    const std::size_t N = x.size();
    checked_log2(N);
    WordArith ar(w);
    for (std::size_t len = 2; len <= N; len <<= 1) {
        for (std::size_t start = 0; start < N; start += len) {
            for (std::size_t j = 0; j < len / 2; j++) {
                auto &top = x[start + j];
                auto &bot = x[start + j + len / 2];
                rotate_forward(ar, bot, plan_rotation(j * N / len, N, A));
                sum_diff_forward(ar, top.re, bot.re);
                sum_diff_forward(ar, top.im, bot.im);
            }
        }
    }
    return finish(std::move(x), ar);
}

OracleResult oracle_iqfft_words(std::vector<FixedComplex> x, std::size_t A, std::size_t w) {
    const std::size_t N = x.size();
    checked_log2(N);
    WordArith ar(w);
    for (std::size_t len = N; len >= 2; len >>= 1) {
        for (std::size_t start = N; start > 0;) {
            start -= len;
            for (std::size_t j = len / 2; j > 0;) {
                j--;
                auto &top = x[start + j];
                auto &bot = x[start + j + len / 2];
                sum_diff_backward(ar, top.im, bot.im);
                sum_diff_backward(ar, top.re, bot.re);
                rotate_backward(ar, bot, plan_rotation(j * N / len, N, A));
            }
        }
    }
    return finish(std::move(x), ar);
}

namespace {

std::vector<FixedComplex> load(std::span<const std::int64_t> data, std::size_t N, std::size_t m, std::size_t A) {
    const std::size_t n = checked_log2(N);
    if (data.size() != N) {
        throw std::invalid_argument("data length does not match N");
    }
    std::vector<FixedComplex> x(N);
    for (std::size_t p = 0; p < N; p++) {
        if (data[p] < 0 || data[p] >= (std::int64_t{1} << m)) {
            throw std::invalid_argument("data value out of range");
        }
        x[reverse_bits(p, n)].re = data[p] * (std::int64_t{1} << A);
    }
    return x;
}

}  // namespace

OracleResult oracle_qfft(std::span<const std::int64_t> data, std::size_t N, std::size_t m, std::size_t A) {
    auto x = load(data, N, m, A);
    return oracle_qfft_words(std::move(x), A, m + checked_log2(N) + A + 1);
}

FilterOracleResult oracle_filter(std::span<const std::int64_t> data, std::size_t N, std::size_t m, std::size_t A,
                                 std::size_t cutoff) {
    if (cutoff < 1 || cutoff > N) {
        throw std::invalid_argument("cutoff out of range");
    }
    FilterOracleResult out;
    out.guard_bits = filter_guard_bits(N, A);
    out.frac_bits = A + out.guard_bits;
    const std::size_t w = m + checked_log2(N) + A + 1 + out.guard_bits;
    auto fwd = oracle_qfft_words(load(data, N, m, A), A, w);

    WordArith scale(w);
    std::vector<FixedComplex> low(N), high(N);
    for (std::size_t k = 0; k < N; k++) {
        FixedComplex z{scale.fit(__int128{fwd.slots[k].re} << out.guard_bits),
                       scale.fit(__int128{fwd.slots[k].im} << out.guard_bits)};
        (k < cutoff ? low : high)[k] = z;
    }
    out.low = oracle_iqfft_words(std::move(low), A, w);
    out.high = oracle_iqfft_words(std::move(high), A, w);
    const bool fwd_overflow = fwd.overflow || scale.overflow;
    out.low.overflow = out.low.overflow || fwd_overflow;
    out.high.overflow = out.high.overflow || fwd_overflow;
    return out;
}

namespace {

// exp(sign * 2 pi i idx / N), exact at quarter turns.
std::complex<double> unit_root(std::size_t idx, std::size_t N, double sign) {
    if ((4 * idx) % N == 0) {
        static const std::complex<double> quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        std::size_t q = 4 * idx / N;
        return sign > 0 ? quarter[q] : quarter[(4 - q) % 4];
    }
    return std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(N));
}

std::vector<std::complex<double>> direct_sum(std::span<const std::complex<double>> x, double sign) {
    const std::size_t N = x.size();
    std::vector<std::complex<double>> out(N);
    for (std::size_t k = 0; k < N; k++) {
        std::complex<double> acc = 0;
        for (std::size_t j = 0; j < N; j++) {
            acc += x[j] * unit_root((j * k) % N, N, sign);
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> float_dft(std::span<const std::complex<double>> x) {
    return direct_sum(x, -1.0);
}

std::vector<std::complex<double>> float_idft(std::span<const std::complex<double>> X) {
    auto out = direct_sum(X, 1.0);
    for (auto &v : out) {
        v /= static_cast<double>(X.size());
    }
    return out;
}

ErrorMetrics error_metrics(std::span<const std::complex<double>> value,
                           std::span<const std::complex<double>> reference) {
    if (value.empty() || value.size() != reference.size()) {
        throw std::invalid_argument("error metrics need two non-empty sequences of equal length");
    }
    ErrorMetrics e;
    double sq = 0;
    double ref_max = 0;
    for (std::size_t i = 0; i < value.size(); i++) {
        const double d = std::abs(value[i] - reference[i]);
        e.l_inf = std::max(e.l_inf, d);
        sq += d * d;
        ref_max = std::max(ref_max, std::abs(reference[i]));
    }
    e.l2 = std::sqrt(sq);
    if (ref_max > 0) {
        e.rel_l_inf = e.l_inf / ref_max;
    } else {
        e.rel_l_inf = e.l_inf == 0 ? 0 : std::numeric_limits<double>::infinity();
    }
    return e;
}

}  // namespace revfft
