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


#include "revfft/verify.hpp"

#include <cstdio>
#include <random>
#include <sstream>

#include "revfft/codec.hpp"
#include "revfft/oracle.hpp"
#include "revfft/qfft.hpp"
#include "revfft/simulator.hpp"

namespace revfft {

using nlohmann::json;

namespace {

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t tag, std::size_t N, std::size_t m, std::size_t A) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(N), static_cast<std::uint32_t>(m),
                      static_cast<std::uint32_t>(A)};
    return std::mt19937_64(seq);
}

std::vector<std::int64_t> draw_input(std::mt19937_64 &rng, std::size_t N, std::size_t m) {
    std::uniform_int_distribution<std::int64_t> dist(0, (std::int64_t{1} << m) - 1);
    std::vector<std::int64_t> x(N);
    for (auto &v : x) {
        v = dist(rng);
    }
    return x;
}

json words_json(const std::vector<FixedComplex> &words) {
    json out = json::array();
    for (const auto &z : words) {
        out.push_back({z.re, z.im});
    }
    return out;
}

void maybe_inject(Circuit &c, const RegisterLayout &layout, bool inject) {
    if (inject) {
        c.append(Gate::x(layout.slots[0].real[0]));
    }
}

void note_failure(VerifyReport &report, json dump) {
    report.passed = false;
    if (report.first_failure.is_null()) {
        report.first_failure = std::move(dump);
    }
}

void check_oracle(VerifyReport &report, const VerifyConfig &cfg, std::size_t N, std::size_t m, std::size_t A) {
    auto q = build_qfft(N, m, A);
    maybe_inject(q.circuit, q.layout, cfg.inject_fault);
    auto rng = case_rng(cfg.seed, 1, N, m, A);
    std::vector<std::vector<std::int64_t>> inputs;
    std::vector<BasisState> states;
    for (std::size_t i = 0; i < cfg.cases; i++) {
        inputs.push_back(draw_input(rng, N, m));
        states.push_back(encode(inputs.back(), q.layout));
    }
    auto outputs = run_batch(q.circuit, std::move(states));
    std::vector<OracleResult> refs(cfg.cases);
    const auto n = static_cast<std::ptrdiff_t>(cfg.cases);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; i++) {
        refs[static_cast<std::size_t>(i)] = oracle_qfft(inputs[static_cast<std::size_t>(i)], N, m, A);
    }

    CheckRow row{"oracle", N, m, A, cfg.cases, 0, ""};
    std::size_t overflows = 0;
    for (std::size_t i = 0; i < cfg.cases; i++) {
        auto got = read_slots(outputs[i], q.layout);
        const bool clean = q.layout.ancilla.empty() || outputs[i].is_zero(q.circuit.register_named("anc"));
        overflows += refs[i].overflow ? 1 : 0;
        if (got != refs[i].slots || refs[i].overflow || !clean) {
            row.failures++;
            note_failure(report, {{"check", "oracle"},
                                  {"N", N},
                                  {"m", m},
                                  {"A", A},
                                  {"case", i},
                                  {"input", inputs[i]},
                                  {"expected", words_json(refs[i].slots)},
                                  {"got", words_json(got)},
                                  {"overflow", refs[i].overflow},
                                  {"ancilla_clean", clean}});
        }
    }
    row.detail = "overflow flags: " + std::to_string(overflows);
    report.rows.push_back(std::move(row));
}

void check_roundtrip(VerifyReport &report, const VerifyConfig &cfg, std::size_t N, std::size_t m, std::size_t A) {
    auto q = build_qfft(N, m, A);
    Circuit both = q.circuit;
    maybe_inject(both, q.layout, cfg.inject_fault);
    both.append(invert(q.circuit));
    auto rng = case_rng(cfg.seed, 2, N, m, A);
    const std::size_t w = q.layout.w;
    std::uniform_int_distribution<std::int64_t> word(-(std::int64_t{1} << (w - 1)), (std::int64_t{1} << (w - 1)) - 1);
    std::vector<BasisState> states;
    for (std::size_t i = 0; i < cfg.roundtrip_cases; i++) {
        BasisState s(q.layout.num_qubits);
        for (const auto &slot : q.layout.slots) {
            s.write_signed(slot.real, word(rng));
            s.write_signed(slot.imag, word(rng));
        }
        states.push_back(std::move(s));
    }
    auto outputs = run_batch(both, states);
    CheckRow row{"roundtrip", N, m, A, cfg.roundtrip_cases, 0, ""};
    for (std::size_t i = 0; i < states.size(); i++) {
        if (outputs[i] != states[i]) {
            row.failures++;
            note_failure(report, {{"check", "roundtrip"},
                                  {"N", N},
                                  {"m", m},
                                  {"A", A},
                                  {"case", i},
                                  {"input", words_json(read_slots(states[i], q.layout))},
                                  {"got", words_json(read_slots(outputs[i], q.layout))}});
        }
    }
    report.rows.push_back(std::move(row));
}

void check_counts(VerifyReport &report, const VerifyConfig &cfg, std::size_t N, std::size_t m, std::size_t A) {
    auto q = build_qfft(N, m, A);
    maybe_inject(q.circuit, q.layout, cfg.inject_fault);
    const auto expanded = count(q.circuit).expanded_count;
    const auto bound = qfft_count_bound(N, A, q.layout.w);
    const std::size_t butterflies = q.circuit.metadata().at("butterflies").get<std::size_t>();
    const std::size_t want = N / 2 * q.layout.log2N();
    CheckRow row{"count_bound", N, m, A, 1, 0, std::to_string(expanded) + " <= " + std::to_string(bound)};
    if (expanded > bound || butterflies != want) {
        row.failures = 1;
        note_failure(report, {{"check", "count_bound"},
                              {"N", N},
                              {"m", m},
                              {"A", A},
                              {"expanded", expanded},
                              {"bound", bound},
                              {"butterflies", butterflies}});
    }
    report.rows.push_back(std::move(row));
}

void check_accuracy(VerifyReport &report, const VerifyConfig &cfg) {
    if (cfg.accuracy_As.empty()) {
        return;
    }
    const std::size_t N = 8;
    const std::size_t m = 4;
    auto rng = case_rng(cfg.seed, 3, N, m, 0);
    std::vector<std::vector<std::int64_t>> inputs;
    for (std::size_t i = 0; i < cfg.accuracy_inputs; i++) {
        inputs.push_back(draw_input(rng, N, m));
    }
    for (auto A : cfg.accuracy_As) {
        auto q = build_qfft(N, m, A);
        maybe_inject(q.circuit, q.layout, cfg.inject_fault);
        std::vector<BasisState> states;
        for (const auto &x : inputs) {
            states.push_back(encode(x, q.layout));
        }
        auto outputs = run_batch(q.circuit, std::move(states));
        AccuracyRow row{A, 0, 0};
        for (std::size_t i = 0; i < inputs.size(); i++) {
            std::vector<std::complex<double>> x(inputs[i].begin(), inputs[i].end());
            auto e = error_metrics(decode_spectrum(outputs[i], q.layout), float_dft(x));
            row.l_inf = std::max(row.l_inf, e.l_inf);
            row.rel_l_inf = std::max(row.rel_l_inf, e.rel_l_inf);
        }
        report.accuracy.push_back(row);
    }
    for (std::size_t i = 1; i < report.accuracy.size(); i++) {
        if (report.accuracy[i].l_inf > report.accuracy[i - 1].l_inf) {
            report.accuracy_monotone = false;
        }
    }
    bool precise = true;
    for (const auto &r : report.accuracy) {
        if (r.A == 12 && r.rel_l_inf >= 1e-2) {
            precise = false;
        }
    }
    if (!report.accuracy_monotone || !precise) {
        json sweep = json::array();
        for (const auto &r : report.accuracy) {
            sweep.push_back({{"A", r.A}, {"l_inf", r.l_inf}, {"rel_l_inf", r.rel_l_inf}});
        }
        note_failure(report, {{"check", "accuracy"}, {"sweep", sweep}});
    }
}

}  // namespace

VerifyReport run_verification(const VerifyConfig &config) {
    VerifyReport report;
    report.seed = config.seed;
    for (auto N : config.Ns) {
        for (auto m : config.ms) {
            for (auto A : config.As) {
                check_oracle(report, config, N, m, A);
                check_roundtrip(report, config, N, m, A);
                check_counts(report, config, N, m, A);
            }
        }
    }
    check_accuracy(report, config);
    return report;
}

json VerifyReport::to_json() const {
    json rows_json = json::array();
    for (const auto &r : rows) {
        rows_json.push_back({{"check", r.check},
                             {"N", r.N},
                             {"m", r.m},
                             {"A", r.A},
                             {"cases", r.cases},
                             {"failures", r.failures},
                             {"detail", r.detail}});
    }
    json acc = json::array();
    for (const auto &r : accuracy) {
        acc.push_back({{"A", r.A}, {"l_inf", r.l_inf}, {"rel_l_inf", r.rel_l_inf}});
    }
    return {{"seed", seed},
            {"passed", passed},
            {"rows", rows_json},
            {"accuracy", acc},
            {"accuracy_monotone", accuracy_monotone},
            {"first_failure", first_failure}};
}

std::string VerifyReport::table() const {
    std::ostringstream out;
    char line[160];
    out << "seed " << seed << "\n";
    std::snprintf(line, sizeof line, "%-12s %3s %3s %3s %6s %8s  %s\n", "check", "N", "m", "A", "cases", "result",
                  "detail");
    out << line;
    for (const auto &r : rows) {
        std::snprintf(line, sizeof line, "%-12s %3zu %3zu %3zu %6zu %8s  %s\n", r.check.c_str(), r.N, r.m, r.A,
                      r.cases, r.passed() ? "PASS" : "FAIL", r.detail.c_str());
        out << line;
    }
    if (!accuracy.empty()) {
        out << "accuracy sweep (N=8, m=4)\n";
        for (const auto &r : accuracy) {
            std::snprintf(line, sizeof line, "  A=%-3zu l_inf=%.6g rel_l_inf=%.6g\n", r.A, r.l_inf, r.rel_l_inf);
            out << line;
        }
        out << "  non-increasing: " << (accuracy_monotone ? "yes" : "no") << "\n";
    }
    out << (passed ? "all checks passed" : "verification FAILED") << "\n";
    if (!first_failure.is_null()) {
        out << "first failure: " << first_failure.dump() << "\n";
    }
    return out.str();
}

}  // namespace revfft
