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

#include <gtest/gtest.h>

#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "revfft/circuit_io.hpp"

using namespace revfft;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("revfft_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }

    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }
    static std::string slurp(const std::string &p) {
        std::ifstream f(p);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    int cli(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return run_cli(args, out_, err_);
    }

    std::ostringstream out_;
    std::ostringstream err_;
    fs::path dir_;
};

std::vector<std::complex<double>> pairs(const json &arr) {
    std::vector<std::complex<double>> v;
    for (const auto &p : arr) {
        v.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    return v;
}

}  // namespace

TEST_F(CliTest, build_is_deterministic) {
    auto a = path("a.json");
    auto b = path("b.json");
    ASSERT_EQ(cli({"build", "--n", "8", "--width", "4", "--accuracy", "10", "--out", a}), EXIT_OK);
    ASSERT_EQ(cli({"build", "--n", "8", "--width", "4", "--accuracy", "10", "--out", b}), EXIT_OK);
    EXPECT_EQ(slurp(a), slurp(b));
    auto c = deserialize(slurp(a));
    EXPECT_EQ(c.metadata()["butterflies"], 12);
    EXPECT_EQ(c.metadata()["N"], 8);
}

TEST_F(CliTest, build_rejects_bad_shape) {
    EXPECT_EQ(cli({"build", "--n", "6", "--width", "4", "--accuracy", "10"}), EXIT_VALIDATION);
    EXPECT_NE(err_.str().find("N must be a power of two"), std::string::npos);
    EXPECT_EQ(cli({"build", "--n", "8"}), EXIT_VALIDATION);
    EXPECT_EQ(cli({"nonsense"}), EXIT_VALIDATION);
    EXPECT_EQ(cli({"build", "--n", "4", "--width", "2", "--out", path("missing/dir/c.json")}), EXIT_IO);
}

TEST_F(CliTest, stats_reports_bound) {
    auto c = path("c.json");
    ASSERT_EQ(cli({"build", "--n", "8", "--width", "4", "--accuracy", "10", "--out", c}), EXIT_OK);
    ASSERT_EQ(cli({"stats", "--in", c}), EXIT_OK);
    auto report = json::parse(out_.str());
    EXPECT_EQ(report["status"], "PASS");
    EXPECT_LE(report["expanded_count"].get<std::size_t>(), report["bound"].get<std::size_t>());

    auto circuit = deserialize(slurp(c));
    const std::size_t bound = report["bound"];
    while (count(circuit).expanded_count <= bound) {
        for (int i = 0; i < 1000; i++) {
            circuit.append(Gate::toffoli(0, 1, 2));
        }
    }
    auto tampered = write("t.json", serialize(circuit));
    EXPECT_EQ(cli({"stats", "--in", tampered}), EXIT_MISMATCH);
    EXPECT_EQ(json::parse(out_.str())["status"], "FAIL");
}

TEST_F(CliTest, stats_edge_cases) {
    auto empty = write("e.json", serialize(Circuit(0)));
    ASSERT_EQ(cli({"stats", "--in", empty}), EXIT_OK);
    auto report = json::parse(out_.str());
    EXPECT_EQ(report["expanded_count"], 0);
    EXPECT_EQ(report["logical_gates"], 0);
    EXPECT_EQ(cli({"stats", "--in", path("nope.json")}), EXIT_IO);
    EXPECT_EQ(cli({"stats", "--in", write("bad.json", "{\"version\": 1")}), EXIT_VALIDATION);
}

TEST_F(CliTest, fft_small_cases) {
    auto d4 = write("d4.json", R"({"N": 4, "m": 3, "data": [1, 2, 3, 4]})");
    ASSERT_EQ(cli({"fft", "--in", d4, "--accuracy", "6"}), EXIT_OK);
    auto r = json::parse(out_.str());
    EXPECT_EQ(pairs(r["spectrum"]),
              (std::vector<std::complex<double>>{{10, 0}, {-2, 2}, {-2, 0}, {-2, -2}}));
    EXPECT_EQ(r["oracle_match"], true);
    EXPECT_EQ(r["error"]["l_inf"], 0.0);

    auto d2 = write("d2.json", R"({"data": [5, 3]})");
    ASSERT_EQ(cli({"fft", "--in", d2, "--out", path("s.json")}), EXIT_OK);
    r = json::parse(slurp(path("s.json")));
    EXPECT_EQ(pairs(r["spectrum"]), (std::vector<std::complex<double>>{{8, 0}, {2, 0}}));
    EXPECT_EQ(r["m"], 3);

    EXPECT_EQ(cli({"fft", "--in", d4, "--width", "1"}), EXIT_VALIDATION);
    EXPECT_EQ(cli({"fft", "--in", d4, "--n", "8"}), EXIT_VALIDATION);
}

TEST_F(CliTest, fft_superposition) {
    auto sup = write("sup.json", R"({"N": 4, "m": 3, "terms": [
        {"amplitude": [0.6, 0], "data": [1, 2, 3, 4]},
        {"amplitude": [0, 0.8], "data": [7, 7, 0, 1]}]})");
    ASSERT_EQ(cli({"fft", "--in", sup, "--superposition", "--accuracy", "8"}), EXIT_OK);
    auto r = json::parse(out_.str());
    ASSERT_EQ(r["terms"].size(), 2u);
    EXPECT_EQ(r["terms"][0]["amplitude"], json({0.6, 0.0}));
    EXPECT_EQ(r["terms"][1]["amplitude"], json({0.0, 0.8}));
    EXPECT_EQ(pairs(r["terms"][0]["spectrum"])[0], std::complex<double>(10, 0));
    EXPECT_EQ(pairs(r["terms"][1]["spectrum"])[0], std::complex<double>(15, 0));

    auto bad = write("bad.json", R"({"terms": [{"amplitude": [0.6, 0], "data": [1, 2]},
                                                {"amplitude": [0.6, 0], "data": [3, 2]}]})");
    EXPECT_EQ(cli({"fft", "--in", bad, "--superposition"}), EXIT_VALIDATION);
}

TEST_F(CliTest, verify_is_deterministic_and_catches_faults) {
    ASSERT_EQ(cli({"verify", "--seed", "7", "--cases", "10"}), EXIT_OK);
    auto first = out_.str();
    EXPECT_NE(first.find("seed 7"), std::string::npos);
    ASSERT_EQ(cli({"verify", "--seed", "7", "--cases", "10"}), EXIT_OK);
    EXPECT_EQ(out_.str(), first);

    EXPECT_EQ(cli({"verify", "--seed", "7", "--cases", "5", "--inject-fault", "--out", path("v.json")}),
              EXIT_MISMATCH);
    EXPECT_NE(out_.str().find("first failure"), std::string::npos);
    auto report = json::parse(slurp(path("v.json")));
    EXPECT_EQ(report["passed"], false);
    EXPECT_EQ(report["first_failure"]["check"], "oracle");
}

TEST_F(CliTest, filter_outputs) {
    auto dc = write("dc.json", R"({"N": 4, "m": 3, "data": [5, 5, 5, 5]})");
    ASSERT_EQ(cli({"filter", "--in", dc, "--cutoff", "1", "--accuracy", "6"}), EXIT_OK);
    auto r = json::parse(out_.str());
    for (auto z : pairs(r["high"])) {
        EXPECT_EQ(z, std::complex<double>(0, 0));
    }
    for (auto z : pairs(r["low"])) {
        EXPECT_EQ(z, std::complex<double>(5, 0));
    }
    EXPECT_EQ(r["within_tolerance"], true);

    auto impulse = write("imp.json", R"({"N": 8, "m": 3, "data": [7, 0, 0, 0, 0, 0, 0, 0]})");
    ASSERT_EQ(cli({"filter", "--in", impulse, "--cutoff", "7", "--accuracy", "8"}), EXIT_OK);
    r = json::parse(out_.str());
    double low_mag = 0;
    double high_mag = 0;
    for (auto z : pairs(r["low"])) {
        low_mag += std::abs(z);
    }
    for (auto z : pairs(r["high"])) {
        high_mag += std::abs(z);
    }
    EXPECT_GT(low_mag, 0);
    EXPECT_GT(high_mag, 0);
    EXPECT_EQ(r["oracle_match"], true);

    EXPECT_EQ(cli({"filter", "--in", dc, "--cutoff", "0"}), EXIT_VALIDATION);
    EXPECT_EQ(cli({"filter", "--in", dc}), EXIT_VALIDATION);
}
