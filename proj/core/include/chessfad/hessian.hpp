// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file hessian.hpp
 * @brief Seeding and the four Hessian engines.
 *
 *   hessian_full   n^2 evaluations over HDual<1>
 *   hessian_sym    n(n+1)/2 evaluations, lower triangle mirrored
 *   chunk_hess     n^2/C evaluations over HDual<C>
 *   schunk_hess    n(n/C+1)/2 evaluations; chunks below the diagonal block
 *                  are skipped and the lower triangle is mirrored
 *
 * All engines also return the gradient, read from slot 1.
 */

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "chessfad/function.hpp"
#include "chessfad/hdual.hpp"
#include "chessfad/hessian_matrix.hpp"

namespace chessfad {

struct HessianResult {
  HessianMatrix hessian;
  std::vector<double> gradient;
};

/**
 * Seeds y for row i and the chunk starting at cstart: y[k] = <a[k], [k==i],
 * unit vector at chunk position k-cstart, 0...>. y must have a.size() entries.
 */
template <std::size_t C, typename S>
void seed_chunk(std::span<HDual<C, S>> y, std::span<const double> a, std::size_t i,
                std::size_t cstart) {
  const std::size_t n = a.size();
  if (y.size() != n) throw std::invalid_argument("seed buffer size mismatch");
  if (i >= n) throw std::out_of_range("row index out of range");
  if (cstart + C > n) throw std::out_of_range("chunk exceeds the variable range");
  for (std::size_t k = 0; k < n; ++k) {
    HDual<C, S> h(a[k]);
    if (k == i) h[1] = S(1.0);
    if (k >= cstart && k < cstart + C) h[k - cstart + 2] = S(1.0);
    y[k] = h;
  }
}

template <std::size_t C, typename S = double>
std::vector<HDual<C, S>> chunk_init(std::span<const double> a, std::size_t i, std::size_t cstart) {
  std::vector<HDual<C, S>> y(a.size());
  seed_chunk<C, S>(y, a, i, cstart);
  return y;
}

/// Single-entry seeding for d2f/dx_i dx_j over HDual<1>.
template <typename S = double>
std::vector<HDual<1, S>> initialize(std::span<const double> a, std::size_t i, std::size_t j) {
  if (j >= a.size()) throw std::out_of_range("column index out of range");
  return chunk_init<1, S>(a, i, j);
}

namespace detail {

template <std::size_t C, typename S, typename F>
HDual<C, S> evaluate(const F& f, const std::vector<HDual<C, S>>& y) {
  return f(std::span<const HDual<C, S>>(y));
}

}  // namespace detail

template <typename S = double, typename F>
  requires CarrierFunction<F, HDual<1, S>>
HessianResult hessian_full(const F& f, std::span<const double> a) {
  const std::size_t n = a.size();
  check_dimension(f, n);
  HessianResult r{HessianMatrix(n), std::vector<double>(n)};
  std::vector<HDual<1, S>> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      seed_chunk<1, S>(y, a, i, j);
      const auto temp = detail::evaluate(f, y);
      r.hessian(i, j) = to_double(temp[3]);
      r.gradient[i] = to_double(temp[1]);
    }
  }
  return r;
}

template <typename S = double, typename F>
  requires CarrierFunction<F, HDual<1, S>>
HessianResult hessian_sym(const F& f, std::span<const double> a) {
  const std::size_t n = a.size();
  check_dimension(f, n);
  HessianResult r{HessianMatrix(n), std::vector<double>(n)};
  std::vector<HDual<1, S>> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      seed_chunk<1, S>(y, a, i, j);
      const auto temp = detail::evaluate(f, y);
      r.hessian(i, j) = to_double(temp[3]);
      r.hessian(j, i) = r.hessian(i, j);
      r.gradient[i] = to_double(temp[1]);
    }
  }
  return r;
}

template <std::size_t C, typename S = double, typename F>
  requires CarrierFunction<F, HDual<C, S>>
HessianResult chunk_hess(const F& f, std::span<const double> a) {
  const std::size_t n = a.size();
  check_dimension(f, n);
  check_chunk(n, C);
  const std::size_t nchunk = n / C;
  HessianResult r{HessianMatrix(n), std::vector<double>(n)};
  std::vector<HDual<C, S>> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < nchunk; ++j) {
      const std::size_t cstart = j * C;
      seed_chunk<C, S>(y, a, i, cstart);
      const auto temp = detail::evaluate(f, y);
      for (std::size_t l = 0; l < C; ++l) r.hessian(i, cstart + l) = to_double(temp[C + 2 + l]);
      r.gradient[i] = to_double(temp[1]);
    }
  }
  return r;
}

template <std::size_t C, typename S = double, typename F>
  requires CarrierFunction<F, HDual<C, S>>
HessianResult schunk_hess(const F& f, std::span<const double> a) {
  const std::size_t n = a.size();
  check_dimension(f, n);
  check_chunk(n, C);
  const std::size_t nchunk = n / C;
  HessianResult r{HessianMatrix(n), std::vector<double>(n)};
  std::vector<HDual<C, S>> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    // The start chunk is evaluated whole, including columns left of the
    // diagonal.
    for (std::size_t j = i / C; j < nchunk; ++j) {
      const std::size_t cstart = j * C;
      seed_chunk<C, S>(y, a, i, cstart);
      const auto temp = detail::evaluate(f, y);
      for (std::size_t l = 0; l < C; ++l) r.hessian(i, cstart + l) = to_double(temp[C + 2 + l]);
      r.gradient[i] = to_double(temp[1]);
    }
  }
  // Mirror the whole strict lower triangle. Inside a diagonal block the
  // entries computed from row i and from row j round differently, since the
  // seeds swap operand order in the product and chain rules.
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) r.hessian(i, j) = r.hessian(j, i);
  }
  return r;
}

/// Number of f evaluations each engine performs.
constexpr std::size_t full_evaluations(std::size_t n) { return n * n; }
constexpr std::size_t sym_evaluations(std::size_t n) { return n * (n + 1) / 2; }
constexpr std::size_t chunk_evaluations(std::size_t n, std::size_t c) { return n * n / c; }
constexpr std::size_t schunk_evaluations(std::size_t n, std::size_t c) { return n * (n / c + 1) / 2; }

}  // namespace chessfad
