// Copyright 2026 The Triport Authors
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

#include <cmath>
#include <random>

#include "triport/basis.hpp"
#include "triport/channel.hpp"
#include "triport/fidelity.hpp"
#include "triport/protocol.hpp"

namespace {

using namespace triport;

const double kPi = std::acos(-1.0);

Scheme scheme_arg(const benchmark::State& state) {
  return state.range(0) == 0 ? Scheme::epr3 : Scheme::ghz2;
}

void BM_TeleportRun(benchmark::State& state) {
  const SchemeConfig cfg{scheme_arg(state), 0.6, 0.8};
  const NoiseSpec noise = NoiseSpec::on_qubit(NoiseKind::depolarizing, 0.2, 4);
  const InputState input = InputState::from_angles(0.9, 1.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(teleport(input, cfg, noise).total_fidelity);
  }
}
BENCHMARK(BM_TeleportRun)->Arg(0)->Arg(1);

void BM_EvaluatorBuild(benchmark::State& state) {
  const SchemeConfig cfg{scheme_arg(state), 0.6, 0.8};
  const NoiseSpec noise = NoiseSpec::on_qubit(NoiseKind::depolarizing, 0.2, 4);
  for (auto _ : state) {
    FidelityEvaluator eval(cfg, noise);
    benchmark::DoNotOptimize(&eval);
  }
}
BENCHMARK(BM_EvaluatorBuild)->Arg(0)->Arg(1);

void BM_EvaluatorFidelity(benchmark::State& state) {
  const SchemeConfig cfg{scheme_arg(state), 0.6, 0.8};
  const FidelityEvaluator eval(
      cfg, NoiseSpec::on_qubit(NoiseKind::bit_flip, 0.1, 7));
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    const double t0 = 0.5 * std::acos(1.0 - 2.0 * uniform_unit(rng));
    const double ph = 2.0 * kPi * uniform_unit(rng);
    benchmark::DoNotOptimize(
        eval.total_fidelity(InputState::from_angles(t0, ph)));
  }
}
BENCHMARK(BM_EvaluatorFidelity)->Arg(0)->Arg(1);

void BM_AverageQuad(benchmark::State& state) {
  const SchemeConfig cfg{Scheme::ghz2, 0.55, 0.85};
  const NoiseSpec noise = NoiseSpec::uniform(NoiseKind::depolarizing, 0.3);
  const QuadratureMethod method{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        average_fidelity(cfg, noise, method).avg_fidelity_sim);
  }
}
BENCHMARK(BM_AverageQuad)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_FullBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_basis(n, kPi / 4.0).size());
  }
}
BENCHMARK(BM_FullBasis)->Arg(3)->Arg(4);

void BM_ChannelBuild(benchmark::State& state) {
  const SchemeConfig cfg{scheme_arg(state), 0.6, 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_channel(cfg).rho.matrix().dim());
  }
}
BENCHMARK(BM_ChannelBuild)->Arg(0)->Arg(1);

void BM_PartialTrace(benchmark::State& state) {
  const ChannelState ch = build_channel({Scheme::ghz2, 0.6, 0.8});
  const int keep[] = {7, 8, 9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        partial_trace(ch.rho, keep, channel_qubit_map()).matrix().dim());
  }
}
BENCHMARK(BM_PartialTrace);

}  // namespace

BENCHMARK_MAIN();
