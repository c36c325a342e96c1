// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "chessfad/hessian.hpp"
#include "chessfad/batch.hpp"
#include "chessfad/testfuncs.hpp"

namespace {

using namespace chessfad;

std::vector<double> point(std::size_t n) {
  const BatchData b = make_random_batch(1, n, 1);
  return b.a;
}

template <typename F>
void BM_HessianFull(benchmark::State& state) {
  const auto a = point(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hessian_full(F{}, a));
}

template <typename F>
void BM_HessianSym(benchmark::State& state) {
  const auto a = point(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hessian_sym(F{}, a));
}

template <std::size_t C, typename F>
void BM_ChunkHess(benchmark::State& state) {
  const auto a = point(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chunk_hess<C>(F{}, a));
}

template <std::size_t C, typename F>
void BM_SchunkHess(benchmark::State& state) {
  const auto a = point(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schunk_hess<C>(F{}, a));
}

}  // namespace

BENCHMARK(BM_HessianFull<Rosenbrock>)->Arg(16);
BENCHMARK(BM_HessianSym<Rosenbrock>)->Arg(16);
BENCHMARK(BM_ChunkHess<1, Rosenbrock>)->Arg(16);
BENCHMARK(BM_ChunkHess<2, Rosenbrock>)->Arg(16);
BENCHMARK(BM_ChunkHess<4, Rosenbrock>)->Arg(16);
BENCHMARK(BM_ChunkHess<8, Rosenbrock>)->Arg(16);
BENCHMARK(BM_ChunkHess<16, Rosenbrock>)->Arg(16);
BENCHMARK(BM_SchunkHess<1, Rosenbrock>)->Arg(16);
BENCHMARK(BM_SchunkHess<2, Rosenbrock>)->Arg(16);
BENCHMARK(BM_SchunkHess<4, Rosenbrock>)->Arg(16);
BENCHMARK(BM_SchunkHess<8, Rosenbrock>)->Arg(16);
BENCHMARK(BM_SchunkHess<16, Rosenbrock>)->Arg(16);

BENCHMARK(BM_ChunkHess<4, Ackley>)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_SchunkHess<4, Ackley>)->Arg(8)->Arg(16)->Arg(32);
