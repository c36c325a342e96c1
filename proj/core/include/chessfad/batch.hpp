// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file batch.hpp
 * @brief Hessian-vector products for many independent instances.
 *
 * Three decompositions of the same work:
 *
 *   L0  one task per instance e
 *   L1  one task per (e, row i)
 *   L2  one task per (e, i, chunk j), followed by an ordered reduction
 *
 * Tasks are numbered lexicographically and split into contiguous ranges,
 * one per worker. Every task writes a disjoint region, and the L2 reduction
 * walks chunks (and the columns inside them) in ascending order, so all
 * levels and worker counts give bit-identical output.
 */

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "chessfad/function.hpp"
#include "chessfad/hdual.hpp"
#include "chessfad/hvp.hpp"

namespace chessfad {

enum class Level { seq, l0, l1, l2 };

std::string_view to_string(Level level);
Level parse_level(std::string_view name);

/// m instances of n variables, instance-major: instance e owns [e*n, e*n+n).
struct BatchData {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> a;
  std::vector<double> in;
  std::vector<double> out;

  BatchData() = default;
  BatchData(std::size_t m, std::size_t n) : m(m), n(n), a(m * n), in(m * n), out(m * n) {}

  std::span<const double> point(std::size_t e) const { return {a.data() + e * n, n}; }
  std::span<const double> vector(std::size_t e) const { return {in.data() + e * n, n}; }
  std::span<double> result(std::size_t e) { return {out.data() + e * n, n}; }

  void validate() const;
  /// Sum of all output entries.
  double checksum() const;
};

/// Points uniform in [-2, 2], multiplicands uniform in [-1, 1].
BatchData make_random_batch(std::size_t m, std::size_t n, std::uint64_t seed);

struct WorkPartition {
  Level level = Level::l0;
  std::size_t task_count = 0;
  unsigned worker_count = 1;
  /// Half-open task ranges, one per worker that has work.
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
};

std::size_t task_count(Level level, std::size_t m, std::size_t n, std::size_t chunk);

/// Splits the task list into contiguous, near-equal ranges.
WorkPartition make_partition(Level level, std::size_t m, std::size_t n, std::size_t chunk,
                             unsigned workers);

/// 0 means "use the hardware concurrency".
unsigned resolve_workers(unsigned requested);

/// Runs body(begin, end) for every range, one thread per range.
void run_partition(const WorkPartition& partition,
                   const std::function<void(std::size_t, std::size_t)>& body);

struct BatchOptions {
  unsigned workers = 0;
  // If non-empty, must hold task_count() counters; each dispatched task
  // increments its own slot.
  std::span<std::atomic<std::uint32_t>> visits = {};
};

namespace detail {

template <std::size_t C, typename F>
void prepare_batch(const F& f, BatchData& batch, const BatchOptions& options, Level level) {
  batch.validate();
  if constexpr (HasDimension<F>) check_dimension(f, batch.n);
  if (batch.n > 0) check_chunk(batch.n, C);
  if (!options.visits.empty() && options.visits.size() != task_count(level, batch.m, batch.n, C)) {
    throw std::invalid_argument("visit counter span does not match the task count");
  }
}

inline void visit(const BatchOptions& options, std::size_t task) {
  if (!options.visits.empty()) options.visits[task].fetch_add(1, std::memory_order_relaxed);
}

}  // namespace detail

/// Sequential reference: chess_vec per instance.
template <std::size_t C, typename F>
void seq_batch_hvp(const F& f, BatchData& batch) {
  detail::prepare_batch<C>(f, batch, {}, Level::seq);
  for (std::size_t e = 0; e < batch.m; ++e) {
    chess_vec<C>(f, batch.point(e), batch.vector(e), batch.result(e));
  }
}

template <std::size_t C, typename F>
void l0_batch_hvp(const F& f, BatchData& batch, const BatchOptions& options = {}) {
  detail::prepare_batch<C>(f, batch, options, Level::l0);
  const auto partition = make_partition(Level::l0, batch.m, batch.n, C, options.workers);
  const std::size_t n = batch.n;
  run_partition(partition, [&](std::size_t begin, std::size_t end) {
    std::vector<HDual<C>> y(n);
    for (std::size_t e = begin; e < end; ++e) {
      detail::visit(options, e);
      const auto a = batch.point(e);
      const auto in = batch.vector(e);
      for (std::size_t i = 0; i < n; ++i) {
        batch.out[e * n + i] = hvp_row<C>(f, a, in, i, std::span(y));
      }
    }
  });
}

template <std::size_t C, typename F>
void l1_batch_hvp(const F& f, BatchData& batch, const BatchOptions& options = {}) {
  detail::prepare_batch<C>(f, batch, options, Level::l1);
  const auto partition = make_partition(Level::l1, batch.m, batch.n, C, options.workers);
  const std::size_t n = batch.n;
  run_partition(partition, [&](std::size_t begin, std::size_t end) {
    std::vector<HDual<C>> y(n);
    for (std::size_t id = begin; id < end; ++id) {
      detail::visit(options, id);
      const std::size_t e = id / n;
      const std::size_t i = id % n;
      batch.out[e * n + i] = hvp_row<C>(f, batch.point(e), batch.vector(e), i, std::span(y));
    }
  });
}

/**
 * Task (e, i, j) stores the C column products of chunk j in a partial
 * buffer slot indexed (e, i, j). Once every task has finished, one reduction
 * per (e, i) sums the slots in ascending (j, l) order, which is exactly the
 * order in which the sequential row sum adds them.
 */
template <std::size_t C, typename F>
void l2_batch_hvp(const F& f, BatchData& batch, const BatchOptions& options = {}) {
  detail::prepare_batch<C>(f, batch, options, Level::l2);
  if (batch.m == 0) return;
  const std::size_t n = batch.n;
  const std::size_t nchunk = n / C;
  std::vector<double> partial(batch.m * n * nchunk * C);

  const auto partition = make_partition(Level::l2, batch.m, n, C, options.workers);
  run_partition(partition, [&](std::size_t begin, std::size_t end) {
    std::vector<HDual<C>> y(n);
    for (std::size_t id = begin; id < end; ++id) {
      detail::visit(options, id);
      const std::size_t e = id / (n * nchunk);
      const std::size_t i = (id / nchunk) % n;
      const std::size_t j = id % nchunk;
      hvp_chunk_products<C>(f, batch.point(e), batch.vector(e), i, j, std::span(y),
                            std::span(partial).subspan(id * C, C));
    }
  });

  const auto rows = make_partition(Level::l1, batch.m, n, C, options.workers);
  run_partition(rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t row = begin; row < end; ++row) {
      const double* p = partial.data() + row * nchunk * C;
      double res = 0.0;
      for (std::size_t k = 0; k < nchunk * C; ++k) res = res + p[k];
      batch.out[row] = res;
    }
  });
}

template <std::size_t C, typename F>
void batch_hvp(Level level, const F& f, BatchData& batch, const BatchOptions& options = {}) {
  switch (level) {
    case Level::seq: return seq_batch_hvp<C>(f, batch);
    case Level::l0: return l0_batch_hvp<C>(f, batch, options);
    case Level::l1: return l1_batch_hvp<C>(f, batch, options);
    case Level::l2: return l2_batch_hvp<C>(f, batch, options);
  }
}

}  // namespace chessfad
