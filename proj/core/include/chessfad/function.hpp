// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace chessfad {

/// A pure function of n variables that can be evaluated over carrier T.
template <typename F, typename T>
concept CarrierFunction = requires(const F& f, std::span<const T> y) {
  { f(y) } -> std::convertible_to<T>;
};

template <typename F>
concept HasDimension = requires(const F& f) {
  { f.dimension() } -> std::convertible_to<std::size_t>;
};

template <typename F>
void check_dimension(const F& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("point must have at least one coordinate");
  if constexpr (HasDimension<F>) {
    if (static_cast<std::size_t>(f.dimension()) != n) {
      throw std::invalid_argument("function expects " + std::to_string(f.dimension()) +
                                  " variables, point has " + std::to_string(n));
    }
  }
}

inline void check_chunk(std::size_t n, std::size_t chunk) {
  if (chunk == 0 || n % chunk != 0) {
    throw std::invalid_argument("chunk size " + std::to_string(chunk) +
                                " does not divide n = " + std::to_string(n));
  }
}

/// Wraps a function and counts how many times it is evaluated.
template <typename F>
class CallCounter {
 public:
  explicit CallCounter(F f) : f_(std::move(f)) {}

  template <typename T>
  T operator()(std::span<const T> y) const {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return f_(y);
  }

  std::size_t dimension() const
    requires HasDimension<F>
  {
    return f_.dimension();
  }

  std::size_t calls() const { return calls_.load(); }
  void reset() { calls_.store(0); }

 private:
  F f_;
  mutable std::atomic<std::size_t> calls_{0};
};

}  // namespace chessfad
