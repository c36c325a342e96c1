// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include "chessfad/random.hpp"

#include <limits>
#include <stdexcept>

namespace chessfad {

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::uniform_open(double lo, double hi) {
  for (;;) {
    const double x = uniform(lo, hi);
    if (x > lo && x < hi) return x;
  }
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace chessfad
