// Copyright 2026 The qss Authors
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

#include <benchmark/benchmark.h>

#include "qss/linalg.h"
#include "qss/random.h"
#include "qss/synthesis.h"
#include "qss/verify.h"
#include "qss/worked_example.h"

namespace {

using namespace qss;

void BM_Rref(benchmark::State &state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    std::vector<Fp> e(size * size);
    for (auto &x : e) {
        x = static_cast<Fp>(rng.uniform_int(7));
    }
    const FpMatrix m(size, size, e);
    const PrimeField f(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(m, f));
    }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(32)->Arg(128);

void BM_PauliMul(benchmark::State &state) {
    const PrimeField f(3);
    const PhasedPauli a{0, worked_example::h(1)};
    const PhasedPauli b{1, worked_example::h(2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pauli_mul(f, a, b));
    }
}
BENCHMARK(BM_PauliMul);

void BM_PlanAndSynthesize(benchmark::State &state) {
    const auto spec = worked_example::code();
    const auto conv = make_encoding_convention(spec);
    const auto j = worked_example::reference_set();
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize_reconstruction(plan_reconstruction(spec, conv, j), spec));
    }
}
BENCHMARK(BM_PlanAndSynthesize);

void BM_LogicalZero(benchmark::State &state) {
    const auto spec = worked_example::code();
    const auto conv = make_encoding_convention(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(logical_zero(spec, conv));
    }
}
BENCHMARK(BM_LogicalZero)->Unit(benchmark::kMillisecond);

void BM_ControlledPauliOnEightQudits(benchmark::State &state) {
    Rng rng(2);
    StateVector s = StateVector::random(PrimeField(3), 8, rng);
    const Gate g = ControlledPauliInvGate{6, 3, 2, 1};
    for (auto _ : state) {
        s.apply(g);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_ControlledPauliOnEightQudits);

void BM_ReconstructionTrial(benchmark::State &state) {
    const auto spec = worked_example::code();
    const auto conv = make_encoding_convention(spec);
    const ReconstructionVerifier verifier(spec, conv);
    const auto j = worked_example::reference_set();
    const auto circuit = synthesize_reconstruction(plan_reconstruction(spec, conv, j), spec);
    Rng rng(3);
    const auto secret = StateVector::random(spec.field, 2, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verifier.run(j, circuit, secret));
    }
}
BENCHMARK(BM_ReconstructionTrial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
