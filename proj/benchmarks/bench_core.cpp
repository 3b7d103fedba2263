// Copyright 2026 The sqcircuit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sqc/cavity_qed.hpp"
#include "sqc/charge_qubit.hpp"
#include "sqc/coupled_qubits.hpp"
#include "sqc/experiments.hpp"
#include "sqc/flux_qubit.hpp"
#include "sqc/noise.hpp"
#include "sqc/phase_qubit.hpp"

namespace {

using namespace sqc;

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = a + (b - a) * k / (n - 1);
  return out;
}

void BM_HermitianEigen(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  const HermitianOperator h(0.5 * (m + m.adjoint()));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(h));
}
BENCHMARK(BM_HermitianEigen)->Arg(4)->Arg(32)->Arg(128);

void BM_ChargeSpectrum(benchmark::State& state) {
  const auto grid = linspace(0.0, 1.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_vs_ng(CpbParams{5.0, 1.0, 0.0, 10}, grid, 5));
}
BENCHMARK(BM_ChargeSpectrum)->Unit(benchmark::kMillisecond);

void BM_ThreeJunction(benchmark::State& state) {
  ThreeJunctionParams p;
  p.grid_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_three_junction(p, 2));
}
BENCHMARK(BM_ThreeJunction)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_PhaseBoundStates(benchmark::State& state) {
  const PhaseQubitParams p{1e5, 1.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(count_bound_states(p));
}
BENCHMARK(BM_PhaseBoundStates)->Unit(benchmark::kMillisecond);

void BM_Cnot(benchmark::State& state) {
  const CoupledParams p{10.0, 7.0, 1.0};
  const auto pulse = cnot_pulse(p, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_cnot(p, pulse));
}
BENCHMARK(BM_Cnot)->Unit(benchmark::kMillisecond);

void BM_T1Decay(benchmark::State& state) {
  const auto grid = linspace(0.0, 3000.0, 301);
  for (auto _ : state) benchmark::DoNotOptimize(t1_decay({1.0, 1.0}, grid));
}
BENCHMARK(BM_T1Decay)->Unit(benchmark::kMillisecond);

void BM_RtnTrajectory(benchmark::State& state) {
  const auto e = FluctuatorEnsemble::log_uniform(20, 1e-4, 1.0, 0.001, 2024);
  std::vector<double> grid(static_cast<std::size_t>(state.range(0)));
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = 0.1 * static_cast<double>(k);
  std::uint64_t traj = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rtn_trajectory(e, grid, traj++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RtnTrajectory)->Arg(1 << 14)->Arg(1 << 17);

void BM_WelchPsd(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  std::vector<double> x(196608);
  for (double& v : x) v = g(rng);
  for (auto _ : state) benchmark::DoNotOptimize(welch_psd(x, 0.1, 131072));
}
BENCHMARK(BM_WelchPsd)->Unit(benchmark::kMillisecond);

void BM_VacuumRabi(benchmark::State& state) {
  JaynesCummingsParams p;
  const auto grid = linspace(0.0, 20.0, 201);
  for (auto _ : state) benchmark::DoNotOptimize(vacuum_rabi(p, grid));
}
BENCHMARK(BM_VacuumRabi)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive is built with a different LTO version.
BENCHMARK_MAIN();
