/*
   Copyright 2026 The stripcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "strip/chain.hpp"
#include "strip/deflation_polys.hpp"
#include "strip/grid.hpp"
#include "strip/mode_ops.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace strip;

ModeSum sample_sum() {
    ModeSum u(2);
    for (long n = 1; n <= 6; ++n)
        u.add(Mode::trig_exp(PiPoly::constant(ratio(1, n)), static_cast<int>(n % 3), Trig::Sin, Rational(n),
                             {ratio(3 * n, 5), ratio(4 * n, 5)}));
    return u;
}

GridSpec sample_grid(int n_t) { return default_grid(2, -3.0, 3.0, n_t); }

void BM_MaxAbsParallel(benchmark::State& state) {
    const Evaluator e(sample_sum());
    const GridSpec g = sample_grid(static_cast<int>(state.range(0)));
    const PointFn f = [&](double t, std::span<const double> y) { return e(t, y); };
    for (auto _ : state) benchmark::DoNotOptimize(kernels::max_abs(g, f));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

void BM_MaxAbsSerial(benchmark::State& state) {
    const Evaluator e(sample_sum());
    const GridSpec g = sample_grid(static_cast<int>(state.range(0)));
    const PointFn f = [&](double t, std::span<const double> y) { return e(t, y); };
    for (auto _ : state) benchmark::DoNotOptimize(kernels::max_abs_serial(g, f));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

void BM_IdentityParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_deflation_identity(static_cast<int>(state.range(0))));
}

void BM_IdentitySerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_deflation_identity_serial(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_MaxAbsParallel)->Arg(65)->Arg(257)->Arg(1025);
BENCHMARK(BM_MaxAbsSerial)->Arg(65)->Arg(257)->Arg(1025);
BENCHMARK(BM_IdentityParallel)->Arg(8)->Arg(12);
BENCHMARK(BM_IdentitySerial)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
