// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

#include "chessfad/batch.hpp"
#include "chessfad/hvp.hpp"
#include "chessfad/testfuncs.hpp"

namespace {

using namespace chessfad;

template <std::size_t C>
void BM_ChessVec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  BatchData b = make_random_batch(1, n, 2);
  for (auto _ : state) {
    chess_vec<C>(Rosenbrock{}, b.point(0), b.vector(0), b.result(0));
    benchmark::ClobberMemory();
  }
}

template <std::size_t C>
void BM_ScHessVec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  BatchData b = make_random_batch(1, n, 2);
  for (auto _ : state) {
    sc_hess_vec<C>(Rosenbrock{}, b.point(0), b.vector(0), b.result(0));
    benchmark::ClobberMemory();
  }
}

// range(0): level, range(1): workers.
void BM_BatchHvp(benchmark::State& state) {
  const auto level = static_cast<Level>(state.range(0));
  const auto workers = static_cast<unsigned>(state.range(1));
  BatchData b = make_random_batch(1000, 8, 3);
  for (auto _ : state) {
    batch_hvp<2>(level, Rosenbrock{}, b, {.workers = workers});
    benchmark::DoNotOptimize(b.out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(b.m));
  state.SetLabel(std::string(to_string(level)));
}

}  // namespace

BENCHMARK(BM_ChessVec<1>)->Arg(8)->Arg(16);
BENCHMARK(BM_ChessVec<2>)->Arg(8)->Arg(16);
BENCHMARK(BM_ChessVec<4>)->Arg(8)->Arg(16);
BENCHMARK(BM_ScHessVec<2>)->Arg(8)->Arg(16);
BENCHMARK(BM_ScHessVec<4>)->Arg(8)->Arg(16);

BENCHMARK(BM_BatchHvp)
    ->ArgsProduct({{static_cast<int>(Level::seq), static_cast<int>(Level::l0), static_cast<int>(Level::l1),
                    static_cast<int>(Level::l2)},
                   {1, 4}})
    ->UseRealTime();
