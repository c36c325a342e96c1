// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file opcount.hpp
 * @brief Arithmetic cost model for chunked Hessians and its measurement.
 *
 * For f built from M carrier multiplications and A carrier additions, one
 * HDual<C> multiply costs 6C+3 scalar multiplies and one HDual<C> add costs
 * 2C+2 scalar adds. The closed forms:
 *
 *   chunk_hess   mults = (6 + 3/C) n^2 M
 *                adds  = 4 n^2 M + (2 + 2/C) n^2 A
 *   schunk_hess  chunks = n (n/C + 1) / 2
 *                mults  = (3/2) n (2n + 2C + n/C + 1) M
 *
 * The chunk_hess addition formula charges 4C adds per HDual multiply. The
 * product rule as implemented needs 4C+1 (C+1 first-order sums plus 3C for
 * the second-order slots), so measured adds exceed the closed form by
 * n^2 M / C. tally_chunk_counts() is the per-operation model that matches
 * the measurement.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "chessfad/counting.hpp"
#include "chessfad/function.hpp"
#include "chessfad/hdual.hpp"
#include "chessfad/hessian.hpp"

namespace chessfad {

OpCount predict_chunk_counts(std::size_t n, std::size_t chunk, std::uint64_t mults,
                             std::uint64_t adds);

/// Per-operation tally: (n^2/C) [(6C+3) M] mults, (n^2/C) [(4C+1) M + (2C+2) A] adds.
OpCount tally_chunk_counts(std::size_t n, std::size_t chunk, std::uint64_t mults,
                           std::uint64_t adds);

struct SchunkPrediction {
  std::uint64_t chunks = 0;
  std::uint64_t mults = 0;
  friend constexpr bool operator==(const SchunkPrediction&, const SchunkPrediction&) = default;
};

SchunkPrediction predict_schunk_counts(std::size_t n, std::size_t chunk, std::uint64_t mults);

std::vector<std::size_t> divisors(std::size_t n);

/**
 * Divisor of n minimising the symmetric-engine multiply count, ties going to
 * the smaller divisor. The continuous minimiser is sqrt(n/2).
 */
std::size_t optimal_chunk(std::size_t n);
double continuous_optimal_chunk(std::size_t n);
/// Divisor of n closest to x, ties going to the smaller divisor.
std::size_t nearest_divisor(std::size_t n, double x);

/// Measured carrier-level cost of one plain evaluation of f at a.
struct EvaluationCost {
  OpCount counts;
  std::uint64_t other_ops = 0;
};

template <typename F>
EvaluationCost measure_evaluation(const F& f, std::span<const double> a) {
  std::vector<CountingScalar> y(a.begin(), a.end());
  CountingSession session;
  (void)f(std::span<const CountingScalar>(y));
  return {session.counts(), session.other_ops()};
}

namespace detail {

template <typename F>
void check_declared_cost(const F& f, std::span<const double> a, std::uint64_t mults,
                         std::uint64_t adds) {
  const auto cost = measure_evaluation(f, a);
  if (cost.other_ops != 0) {
    throw std::invalid_argument("strict counting: function uses operations other than + and *");
  }
  if (cost.counts.mults != mults || cost.counts.adds != adds) {
    throw std::invalid_argument("strict counting: function does not use the declared M and A");
  }
}

inline std::vector<double> counting_point(std::size_t n) {
  std::vector<double> a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = 1.0 + 0.25 * static_cast<double>(k);
  return a;
}

}  // namespace detail

/**
 * Runs chunk_hess over HDual<C, CountingScalar> and returns the scalar tally.
 * Seeding assigns constants and is not counted. In strict mode f must use
 * exactly `mults` carrier multiplications, `adds` carrier additions and
 * nothing else.
 */
template <std::size_t C, typename F>
OpCount count_chunk_hess(const F& f, std::span<const double> a, std::uint64_t mults,
                         std::uint64_t adds, bool strict = true) {
  if (strict) detail::check_declared_cost(f, a, mults, adds);
  CountingSession session;
  (void)chunk_hess<C, CountingScalar>(f, a);
  if (strict && session.other_ops() != 0) {
    throw std::invalid_argument("strict counting: unexpected non-arithmetic operations");
  }
  return session.counts();
}

template <std::size_t C, typename F>
OpCount count_chunk_hess(const F& f, std::size_t n, std::uint64_t mults, std::uint64_t adds,
                         bool strict = true) {
  const auto a = detail::counting_point(n);
  return count_chunk_hess<C>(f, std::span<const double>(a), mults, adds, strict);
}

template <std::size_t C, typename F>
OpCount count_schunk_hess(const F& f, std::span<const double> a) {
  CountingSession session;
  (void)schunk_hess<C, CountingScalar>(f, a);
  return session.counts();
}

template <std::size_t C, typename F>
OpCount count_schunk_hess(const F& f, std::size_t n) {
  const auto a = detail::counting_point(n);
  return count_schunk_hess<C>(f, std::span<const double>(a));
}

}  // namespace chessfad
