// Copyright 2026 The thetarho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "thetarho/exponents.hpp"
#include "thetarho/sdp_core.hpp"
#include "thetarho/theta.hpp"

namespace {

using namespace thetarho;

SymMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s.set(i, j, u(rng));
  return s;
}

void BM_Eigh(benchmark::State& state) {
  const SymMatrix s = random_symmetric(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(s));
}
BENCHMARK(BM_Eigh)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_DykstraPentagonLovasz(benchmark::State& state) {
  const auto b = bhattacharyya_matrix(noisy_typewriter(5, 0.5));
  // Just inside the optimal handle level 5^{-1/4}.
  const EntryBox box = representation_box(b, std::nullopt, 0.66);
  const SymMatrix start = SymMatrix::identity(6);
  for (auto _ : state) benchmark::DoNotOptimize(dykstra_feasibility(box, start));
}
BENCHMARK(BM_DykstraPentagonLovasz)->Unit(benchmark::kMillisecond);

void BM_ThetaBsc(benchmark::State& state) {
  const auto b = bhattacharyya_matrix(bsc(0.1));
  for (auto _ : state) benchmark::DoNotOptimize(theta_rho(b, 2.0));
}
BENCHMARK(BM_ThetaBsc)->Unit(benchmark::kMillisecond);

void BM_ThetaPentagon(benchmark::State& state) {
  const auto b = bhattacharyya_matrix(noisy_typewriter(5, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(theta_rho(b, 2.0));
}
BENCHMARK(BM_ThetaPentagon)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_SimplexQp(benchmark::State& state) {
  const auto b = bhattacharyya_matrix(noisy_typewriter(5, 0.5));
  const auto b2 = kron_power_bhatt(b, 2);
  for (auto _ : state) benchmark::DoNotOptimize(expurgated_coeff(b2, 2.0));
}
BENCHMARK(BM_SimplexQp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
