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


// Serial vs OpenMP batch simulation of a compiled transform.

#include <benchmark/benchmark.h>

#include <random>

#include "revfft/codec.hpp"
#include "revfft/qfft.hpp"
#include "revfft/simulator.hpp"

namespace {

using namespace revfft;

struct Fixture {
    QfftCircuit q = build_qfft(8, 4, 10);
    std::vector<BasisState> states;

    explicit Fixture(std::size_t batch) {
        std::mt19937_64 rng(batch);
        std::uniform_int_distribution<std::int64_t> dist(0, 15);
        for (std::size_t i = 0; i < batch; i++) {
            std::vector<std::int64_t> x(8);
            for (auto &v : x) {
                v = dist(rng);
            }
            states.push_back(encode(x, q.layout));
        }
    }
};

void BM_batch_serial(benchmark::State &state) {
    Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_batch_serial(f.q.circuit, f.states));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_batch_parallel(benchmark::State &state) {
    Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_batch(f.q.circuit, f.states));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_batch_serial)->Arg(16)->Arg(256)->UseRealTime();
BENCHMARK(BM_batch_parallel)->Arg(16)->Arg(256)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
