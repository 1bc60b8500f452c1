// Copyright 2026 the umetrics developers
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

#include "umetrics/inequalities.hpp"
#include "umetrics/linalg.hpp"
#include "umetrics/metrics.hpp"
#include "umetrics/norms.hpp"

namespace {

using namespace umetrics;

void BM_HaarUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::haar_unitary(n, rng));
  }
}
BENCHMARK(BM_HaarUnitary)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_EigUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(2);
  const ComplexMatrix u = linalg::haar_unitary(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::eig_unitary(u));
  }
}
BENCHMARK(BM_EigUnitary)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_EigHermitian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(3);
  const ComplexMatrix h = linalg::gue_hermitian(n, 1.0, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::eig_hermitian(h));
  }
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Metric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(4);
  const ComplexMatrix x = linalg::haar_unitary(n, rng);
  const ComplexMatrix y = linalg::haar_unitary(n, rng);
  const auto g = norms::SymmetricNormSpec::lp(2.0, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(metrics::metric(g, x, y));
  }
}
BENCHMARK(BM_Metric)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_PseudoMetricSolver(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(5);
  const ComplexMatrix x = linalg::haar_unitary(n, rng);
  const ComplexMatrix y = linalg::haar_unitary(n, rng);
  const auto g = norms::SymmetricNormSpec::lp(1.0, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(metrics::pseudo_metric(g, x, y));
  }
}
BENCHMARK(BM_PseudoMetricSolver)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_PseudoMetricGridOracle(benchmark::State& state) {
  RandomStream rng(6);
  const ComplexMatrix x = linalg::haar_unitary(4, rng);
  const ComplexMatrix y = linalg::haar_unitary(4, rng);
  const auto g = norms::SymmetricNormSpec::lp(1.0, 4);
  const long points = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(metrics::pseudo_metric_grid_oracle(g, x, y, points));
  }
}
BENCHMARK(BM_PseudoMetricGridOracle)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_KyFanChainTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        suites::kyfan_chain_trial(n, mix_seed(7, trial++), nullptr));
  }
}
BENCHMARK(BM_KyFanChainTrial)->Arg(2)->Arg(4)->Arg(6);

void BM_UnitaryLidskiiTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        suites::unitary_lidskii_trial(n, 1, n, mix_seed(8, trial++), nullptr));
  }
}
BENCHMARK(BM_UnitaryLidskiiTrial)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
