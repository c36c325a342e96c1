// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace chessfad {

/**
 * Portable seeded generator. std::mt19937_64 has a fully specified output
 * sequence; the mappings to reals and bounded integers below are written
 * out here instead of using <random> distributions, whose algorithms are
 * implementation-defined.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform in the open interval (lo, hi).
  double uniform_open(double lo, double hi);
  /// Uniform integer in [lo, hi], unbiased by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace chessfad
