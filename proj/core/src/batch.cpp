// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include "chessfad/batch.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "chessfad/random.hpp"

namespace chessfad {

std::string_view to_string(Level level) {
  switch (level) {
    case Level::seq: return "seq";
    case Level::l0: return "l0";
    case Level::l1: return "l1";
    case Level::l2: return "l2";
  }
  return "?";
}

Level parse_level(std::string_view name) {
  if (name == "seq") return Level::seq;
  if (name == "l0") return Level::l0;
  if (name == "l1") return Level::l1;
  if (name == "l2") return Level::l2;
  throw std::invalid_argument("unknown level '" + std::string(name) + "'");
}

void BatchData::validate() const {
  const std::size_t size = m * n;
  if (a.size() != size || in.size() != size || out.size() != size) {
    throw std::invalid_argument("batch matrices must all be m x n");
  }
  if (m > 0 && n == 0) throw std::invalid_argument("batch instances need at least one variable");
}

double BatchData::checksum() const {
  double sum = 0.0;
  for (double x : out) sum += x;
  return sum;
}

BatchData make_random_batch(std::size_t m, std::size_t n, std::uint64_t seed) {
  BatchData batch(m, n);
  Rng rng(seed);
  for (double& x : batch.a) x = rng.uniform(-2.0, 2.0);
  for (double& x : batch.in) x = rng.uniform(-1.0, 1.0);
  return batch;
}

std::size_t task_count(Level level, std::size_t m, std::size_t n, std::size_t chunk) {
  switch (level) {
    case Level::seq:
    case Level::l0: return m;
    case Level::l1: return m * n;
    case Level::l2: return m * n * (n / chunk);
  }
  return 0;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

WorkPartition make_partition(Level level, std::size_t m, std::size_t n, std::size_t chunk,
                             unsigned workers) {
  WorkPartition p;
  p.level = level;
  p.task_count = task_count(level, m, n, chunk);
  p.worker_count = resolve_workers(workers);
  const std::size_t w = std::min<std::size_t>(p.worker_count, p.task_count);
  std::size_t begin = 0;
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t size = p.task_count / w + (k < p.task_count % w ? 1 : 0);
    p.ranges.emplace_back(begin, begin + size);
    begin += size;
  }
  return p;
}

void run_partition(const WorkPartition& partition,
                   const std::function<void(std::size_t, std::size_t)>& body) {
  if (partition.ranges.empty()) return;
  if (partition.ranges.size() == 1) {
    body(partition.ranges[0].first, partition.ranges[0].second);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(partition.ranges.size());
    for (const auto& [begin, end] : partition.ranges) {
      threads.emplace_back([&, begin = begin, end = end] {
        try {
          body(begin, end);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace chessfad
