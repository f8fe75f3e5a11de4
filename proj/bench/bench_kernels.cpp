// Copyright 2026 The adaptlab Authors
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

// OpenMP kernels against their serial reference twins. Thread count follows
// ADAPTLAB_THREADS (or OMP_NUM_THREADS).

#include "adaptlab/adapt_vqe.hpp"
#include "adaptlab/classes.hpp"
#include "adaptlab/harness/experiments.hpp"
#include "adaptlab/hamiltonians.hpp"
#include "adaptlab/vqe_baseline.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace adaptlab;

const DenseOperator& xy_h() {
  static const DenseOperator h = to_dense(HamiltonianSpec{.model = "xy"}.build());
  return h;
}

template <bool Parallel>
void BM_PoolGradient(benchmark::State& state) {
  const OperatorPool pool = build_full_pool(4);
  Rng rng(1);
  const QuantumState psi = random_state(4, rng);
  for (auto _ : state) {
    auto g = Parallel ? gradient_vector(psi, pool, xy_h()) : gradient_vector_serial(psi, pool, xy_h());
    benchmark::DoNotOptimize(g.data());
  }
}
BENCHMARK(BM_PoolGradient<true>)->Name("pool_gradient/omp");
BENCHMARK(BM_PoolGradient<false>)->Name("pool_gradient/serial");

template <bool Parallel>
void BM_ClassScan(benchmark::State& state) {
  const auto grid = linear_grid(-3.0, 3.0, 0.05);
  const HamiltonianSpec xy{.model = "xy"};
  for (auto _ : state) {
    auto rows = Parallel ? class_scan(xy, grid) : class_scan_serial(xy, grid);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_ClassScan<true>)->Name("class_scan/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassScan<false>)->Name("class_scan/serial")->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_LuEnsemble(benchmark::State& state) {
  AdaptConfig adapt;
  const HamiltonianSpec model{.model = "xxz", .delta = 3.0};
  for (auto _ : state) {
    auto st = Parallel ? lu_ensemble(model, "C9", std::nullopt, 8, 7, adapt)
                       : lu_ensemble_serial(model, "C9", std::nullopt, 8, 7, adapt);
    benchmark::DoNotOptimize(st.mean_ops);
  }
}
BENCHMARK(BM_LuEnsemble<true>)->Name("lu_ensemble/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LuEnsemble<false>)->Name("lu_ensemble/serial")->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_VqeRestarts(benchmark::State& state) {
  const QuantumState init = representative_state("C31");
  for (auto _ : state) {
    auto r = Parallel ? run_vqe(xy_h(), init, LayeredAnsatz{}, 3) : run_vqe_serial(xy_h(), init, LayeredAnsatz{}, 3);
    benchmark::DoNotOptimize(r.energy);
  }
}
BENCHMARK(BM_VqeRestarts<true>)->Name("vqe_restarts/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VqeRestarts<false>)->Name("vqe_restarts/serial")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
