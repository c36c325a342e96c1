// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace chessfad {

/// Chunk sizes with a precompiled HDual instantiation for run-time selection.
inline constexpr std::array<std::size_t, 17> kDispatchChunkSizes = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 32};

constexpr bool is_dispatchable_chunk(std::size_t c) {
  for (std::size_t s : kDispatchChunkSizes) {
    if (s == c) return true;
  }
  return false;
}

namespace detail {

template <typename Fn, std::size_t... I>
decltype(auto) dispatch_chunk_impl(std::size_t c, Fn&& fn, std::index_sequence<I...>) {
  using R = decltype(fn(std::integral_constant<std::size_t, kDispatchChunkSizes[0]>{}));
  if constexpr (std::is_void_v<R>) {
    const bool hit = ((c == kDispatchChunkSizes[I]
                           ? (fn(std::integral_constant<std::size_t, kDispatchChunkSizes[I]>{}), true)
                           : false) ||
                      ...);
    if (!hit) throw std::invalid_argument("unsupported chunk size " + std::to_string(c));
  } else {
    R result{};
    const bool hit =
        ((c == kDispatchChunkSizes[I]
              ? (result = fn(std::integral_constant<std::size_t, kDispatchChunkSizes[I]>{}), true)
              : false) ||
         ...);
    if (!hit) throw std::invalid_argument("unsupported chunk size " + std::to_string(c));
    return result;
  }
}

}  // namespace detail

/**
 * Calls fn(std::integral_constant<std::size_t, C>{}) for the compile-time C
 * equal to c. Throws std::invalid_argument if c is not in
 * kDispatchChunkSizes.
 */
template <typename Fn>
decltype(auto) dispatch_chunk(std::size_t c, Fn&& fn) {
  return detail::dispatch_chunk_impl(c, std::forward<Fn>(fn),
                                     std::make_index_sequence<kDispatchChunkSizes.size()>{});
}

}  // namespace chessfad
