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


#include "revfft/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "revfft/circuit_io.hpp"
#include "revfft/codec.hpp"
#include "revfft/oracle.hpp"
#include "revfft/qfft.hpp"
#include "revfft/simulator.hpp"
#include "revfft/verify.hpp"

namespace revfft {

using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::optional<std::size_t> N;
    std::optional<std::size_t> m;
    std::size_t A = 10;
    std::optional<std::size_t> cutoff;
    std::string in;
    std::string out;
    std::uint64_t seed = 1;
    std::size_t cases = 50;
    bool superposition = false;
    bool inject_fault = false;
};

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        throw IoError("cannot write '" + cfg.out + "'");
    }
}

json parse_json(const std::string &text, const std::string &what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("malformed " + what + ": " + e.what());
    }
}

json complex_list(const std::vector<std::complex<double>> &v) {
    json out = json::array();
    for (const auto &z : v) {
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

std::size_t bits_for(std::int64_t v) {
    std::size_t b = 1;
    while (b < 62 && (std::int64_t{1} << b) <= v) {
        b++;
    }
    return b;
}

std::vector<std::int64_t> data_field(const json &obj) {
    if (!obj.contains("data") || !obj.at("data").is_array()) {
        throw std::invalid_argument("input needs a \"data\" array");
    }
    std::vector<std::int64_t> x;
    for (const auto &v : obj.at("data")) {
        if (!v.is_number_integer()) {
            throw std::invalid_argument("data values must be integers");
        }
        x.push_back(v.get<std::int64_t>());
    }
    return x;
}

// N and m come from flags, then from the file, then from the data itself.
void resolve_shape(RunConfig &cfg, const json &doc, const std::vector<std::int64_t> &x) {
    std::size_t N = x.size();
    if (doc.contains("N")) {
        N = doc.at("N").get<std::size_t>();
    }
    if (cfg.N && *cfg.N != N) {
        throw std::invalid_argument("--n " + std::to_string(*cfg.N) + " does not match the input length");
    }
    if (x.size() != N) {
        throw std::invalid_argument("input declares N = " + std::to_string(N) + " but has " +
                                    std::to_string(x.size()) + " values");
    }
    cfg.N = N;
    if (!cfg.m) {
        if (doc.contains("m")) {
            cfg.m = doc.at("m").get<std::size_t>();
        } else {
            std::int64_t hi = 0;
            for (auto v : x) {
                hi = std::max(hi, v);
            }
            cfg.m = bits_for(hi);
        }
    }
}

json spectrum_report(const std::vector<std::int64_t> &x, const BasisState &out_state, const QfftCircuit &q,
                     bool &all_match) {
    auto spectrum = decode_spectrum(out_state, q.layout);
    auto ref = oracle_qfft(x, q.layout.N, q.layout.m, q.layout.A);
    const bool match = read_slots(out_state, q.layout) == ref.slots && !ref.overflow;
    all_match = all_match && match;
    std::vector<std::complex<double>> xc(x.begin(), x.end());
    auto reference = float_dft(xc);
    auto e = error_metrics(spectrum, reference);
    return {{"data", x},
            {"spectrum", complex_list(spectrum)},
            {"oracle_spectrum", complex_list(to_complex(ref.slots, q.layout.A))},
            {"oracle_match", match},
            {"reference", complex_list(reference)},
            {"error", {{"l_inf", e.l_inf}, {"l2", e.l2}, {"rel_l_inf", e.rel_l_inf}}}};
}

int cmd_build(RunConfig &cfg, std::ostream &out) {
    if (!cfg.N || !cfg.m) {
        throw std::invalid_argument("build needs --n and --width");
    }
    auto q = cfg.cutoff ? build_filter(*cfg.N, *cfg.m, cfg.A, *cfg.cutoff) : build_qfft(*cfg.N, *cfg.m, cfg.A);
    emit(cfg, serialize(q.circuit) + "\n", out);
    return EXIT_OK;
}

int cmd_stats(RunConfig &cfg, std::ostream &out) {
    if (cfg.in.empty()) {
        throw std::invalid_argument("stats needs --in");
    }
    auto c = deserialize(read_file(cfg.in));
    auto s = count(c);
    json gates = json::object();
    for (auto k : ALL_GATE_KINDS) {
        gates[std::string(gate_name(k))] = s[k];
    }
    json report = {{"gates", gates},
                   {"logical_gates", s.num_gates},
                   {"expanded_count", s.expanded_count},
                   {"num_qubits", s.num_qubits},
                   {"num_ancilla", s.num_ancilla}};
    const auto &meta = c.metadata();
    const std::string kind = meta.value("kind", "");
    int code = EXIT_OK;
    if ((kind == "qfft" || kind == "iqfft") && meta.contains("N") && meta.contains("A") && meta.contains("w")) {
        const auto bound =
            qfft_count_bound(meta.at("N").get<std::size_t>(), meta.at("A").get<std::size_t>(),
                             meta.at("w").get<std::size_t>());
        const bool ok = s.expanded_count <= bound;
        report["bound"] = bound;
        report["status"] = ok ? "PASS" : "FAIL";
        code = ok ? EXIT_OK : EXIT_MISMATCH;
    } else {
        report["bound"] = nullptr;
        report["status"] = "n/a";
    }
    emit(cfg, report.dump(2) + "\n", out);
    return code;
}

int cmd_fft(RunConfig &cfg, std::ostream &out) {
    if (cfg.in.empty()) {
        throw std::invalid_argument("fft needs --in");
    }
    auto doc = parse_json(read_file(cfg.in), "input file");
    bool all_match = true;
    json report;
    if (cfg.superposition) {
        if (!doc.contains("terms") || !doc.at("terms").is_array() || doc.at("terms").empty()) {
            throw std::invalid_argument("superposition input needs a non-empty \"terms\" array");
        }
        std::vector<std::vector<std::int64_t>> inputs;
        std::vector<Amplitude> amps;
        for (const auto &t : doc.at("terms")) {
            inputs.push_back(data_field(t));
            const auto &a = t.at("amplitude");
            amps.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
        }
        resolve_shape(cfg, doc, inputs.front());
        auto q = build_qfft(*cfg.N, *cfg.m, cfg.A);
        std::vector<SparseState::Term> terms;
        std::vector<BasisState> encoded;
        for (std::size_t i = 0; i < inputs.size(); i++) {
            if (inputs[i].size() != *cfg.N) {
                throw std::invalid_argument("superposition terms differ in length");
            }
            encoded.push_back(encode(inputs[i], q.layout));
            terms.emplace_back(encoded.back(), amps[i]);
        }
        auto result = run(q.circuit, SparseState(std::move(terms)));
        json out_terms = json::array();
        for (std::size_t i = 0; i < inputs.size(); i++) {
            auto image = run_basis(q.circuit, encoded[i]);
            auto amp = result.amplitude(image);
            json t = spectrum_report(inputs[i], image, q, all_match);
            t["amplitude"] = {amp.real(), amp.imag()};
            all_match = all_match && amp == amps[i];
            out_terms.push_back(std::move(t));
        }
        report = {{"N", *cfg.N}, {"m", *cfg.m}, {"A", cfg.A}, {"w", q.layout.w}, {"terms", out_terms}};
    } else {
        auto x = data_field(doc);
        resolve_shape(cfg, doc, x);
        auto q = build_qfft(*cfg.N, *cfg.m, cfg.A);
        auto image = run_basis(q.circuit, encode(x, q.layout));
        report = spectrum_report(x, image, q, all_match);
        report["N"] = *cfg.N;
        report["m"] = *cfg.m;
        report["A"] = cfg.A;
        report["w"] = q.layout.w;
    }
    emit(cfg, report.dump(2) + "\n", out);
    return all_match ? EXIT_OK : EXIT_MISMATCH;
}

int cmd_verify(RunConfig &cfg, std::ostream &out) {
    VerifyConfig vc;
    vc.seed = cfg.seed;
    vc.cases = cfg.cases;
    vc.inject_fault = cfg.inject_fault;
    auto report = run_verification(vc);
    out << report.table();
    if (!cfg.out.empty()) {
        emit(cfg, report.to_json().dump(2) + "\n", out);
    }
    return report.passed ? EXIT_OK : EXIT_MISMATCH;
}

int cmd_filter(RunConfig &cfg, std::ostream &out) {
    if (cfg.in.empty() || !cfg.cutoff) {
        throw std::invalid_argument("filter needs --in and --cutoff");
    }
    auto doc = parse_json(read_file(cfg.in), "input file");
    auto x = data_field(doc);
    resolve_shape(cfg, doc, x);
    auto f = build_filter(*cfg.N, *cfg.m, cfg.A, *cfg.cutoff);
    auto state = run_basis(f.circuit, encode(x, f.layout));
    auto low = decode_data(state, f.layout);
    auto high = decode_data(state, f.layout, true);
    auto ref = oracle_filter(x, *cfg.N, *cfg.m, cfg.A, *cfg.cutoff);
    const bool match = read_slots(state, f.layout) == ref.low.slots &&
                       read_slots(state, f.layout, true) == ref.high.slots && !ref.low.overflow &&
                       !ref.high.overflow;
    std::vector<std::complex<double>> sum(x.size());
    double max_err = 0;
    double max_x = 0;
    for (std::size_t p = 0; p < x.size(); p++) {
        sum[p] = low[p] + high[p];
        max_err = std::max(max_err, std::abs(sum[p] - std::complex<double>(static_cast<double>(x[p]), 0)));
        max_x = std::max(max_x, static_cast<double>(x[p]));
    }
    const double tol = std::ldexp(1.0, 4 - static_cast<int>(cfg.A)) * static_cast<double>(*cfg.N) * max_x;
    const bool within = max_err <= tol;
    json report = {{"N", *cfg.N},
                   {"m", *cfg.m},
                   {"A", cfg.A},
                   {"cutoff", *cfg.cutoff},
                   {"guard_bits", f.layout.guard_bits},
                   {"input", x},
                   {"low", complex_list(low)},
                   {"high", complex_list(high)},
                   {"sum", complex_list(sum)},
                   {"max_abs_error", max_err},
                   {"tolerance", tol},
                   {"within_tolerance", within},
                   {"oracle_match", match}};
    emit(cfg, report.dump(2) + "\n", out);
    return match && within ? EXIT_OK : EXIT_MISMATCH;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Reversible fixed-point FFT circuit compiler", "revfft"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_shape = [&](CLI::App *sub) {
        sub->add_option("--n", cfg.N, "Transform length (power of two)");
        sub->add_option("--width", cfg.m, "Input integer bits m");
        sub->add_option("--accuracy", cfg.A, "Rotation accuracy bits A")->capture_default_str();
    };
    auto *build = app.add_subcommand("build", "Compile a transform circuit to JSON");
    add_shape(build);
    build->add_option("--cutoff", cfg.cutoff, "Build the filter circuit with this cutoff instead");
    build->add_option("--out", cfg.out, "Output file (default stdout)");

    auto *stats = app.add_subcommand("stats", "Gate counts and the count bound for a circuit file");
    stats->add_option("--in", cfg.in, "Circuit file")->required();
    stats->add_option("--out", cfg.out, "Output file (default stdout)");

    auto *fft = app.add_subcommand("fft", "Transform a data file through the simulated circuit");
    add_shape(fft);
    fft->add_option("--in", cfg.in, "Data file")->required();
    fft->add_option("--out", cfg.out, "Output file (default stdout)");
    fft->add_flag("--superposition", cfg.superposition, "Input holds amplitude-weighted terms");

    auto *verify = app.add_subcommand("verify", "Seeded circuit/oracle cross-check suite");
    verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    verify->add_option("--cases", cfg.cases, "Random inputs per configuration")->capture_default_str();
    verify->add_option("--out", cfg.out, "Also write the JSON report here");
    verify->add_flag("--inject-fault", cfg.inject_fault, "Corrupt the circuits under test");

    auto *filter = app.add_subcommand("filter", "Split a sequence into low- and high-pass parts");
    add_shape(filter);
    filter->add_option("--cutoff", cfg.cutoff, "First frequency moved to the high-pass bank")->required();
    filter->add_option("--in", cfg.in, "Data file")->required();
    filter->add_option("--out", cfg.out, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_VALIDATION;
    }

    try {
        if (*build) {
            return cmd_build(cfg, out);
        }
        if (*stats) {
            return cmd_stats(cfg, out);
        }
        if (*fft) {
            return cmd_fft(cfg, out);
        }
        if (*verify) {
            return cmd_verify(cfg, out);
        }
        return cmd_filter(cfg, out);
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_IO;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_VALIDATION;
    } catch (const json::exception &e) {
        err << "error: malformed input: " << e.what() << "\n";
        return EXIT_VALIDATION;
    }
}

}  // namespace revfft
