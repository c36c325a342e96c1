// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Matrix-free Hessian-vector products. A chunk of row i of H only
// contributes to out[i], so each chunk is folded into the row sum and
// discarded as soon as it is evaluated.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "chessfad/function.hpp"
#include "chessfad/hdual.hpp"
#include "chessfad/hessian.hpp"

namespace chessfad {

namespace detail {

inline void check_hvp_shapes(std::size_t n, std::size_t in, std::size_t out) {
  if (in != n) throw std::invalid_argument("multiplicand length does not match the point");
  if (out != n) throw std::invalid_argument("output length does not match the point");
}

}  // namespace detail

/**
 * Writes the C products H[i][cstart+l] * in[cstart+l] of chunk j of row i
 * into products. y is caller-owned scratch of length n.
 */
template <std::size_t C, typename S = double, typename F>
void hvp_chunk_products(const F& f, std::span<const double> a, std::span<const double> in,
                        std::size_t i, std::size_t j, std::span<HDual<C, S>> y,
                        std::span<double> products) {
  const std::size_t cstart = j * C;
  seed_chunk<C, S>(y, a, i, cstart);
  const HDual<C, S> temp = f(std::span<const HDual<C, S>>(y.data(), y.size()));
  for (std::size_t l = 0; l < C; ++l) {
    products[l] = to_double(temp[C + 2 + l]) * in[cstart + l];
  }
}

/// One entry of H * in: row i, chunks visited left to right.
template <std::size_t C, typename S = double, typename F>
double hvp_row(const F& f, std::span<const double> a, std::span<const double> in, std::size_t i,
               std::span<HDual<C, S>> y) {
  double products[C];
  double res = 0.0;
  for (std::size_t j = 0; j < a.size() / C; ++j) {
    hvp_chunk_products<C, S>(f, a, in, i, j, y, products);
    for (std::size_t l = 0; l < C; ++l) res = res + products[l];
  }
  return res;
}

template <std::size_t C, typename S = double, typename F>
  requires CarrierFunction<F, HDual<C, S>>
void chess_vec(const F& f, std::span<const double> a, std::span<const double> in,
               std::span<double> out) {
  const std::size_t n = a.size();
  check_dimension(f, n);
  check_chunk(n, C);
  detail::check_hvp_shapes(n, in.size(), out.size());
  std::vector<HDual<C, S>> y(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = hvp_row<C, S>(f, a, in, i, std::span(y));
}

template <std::size_t C, typename S = double, typename F>
  requires CarrierFunction<F, HDual<C, S>>
std::vector<double> chess_vec(const F& f, std::span<const double> a, std::span<const double> in) {
  std::vector<double> out(a.size());
  chess_vec<C, S>(f, a, in, std::span(out));
  return out;
}

/**
 * Symmetric variant: row i visits only chunks from its diagonal chunk on.
 * Entries of later chunks also feed out[s] += H[i][s] * in[i]; entries of the
 * diagonal chunk feed out[i] only, since row s computes that block itself.
 */
template <std::size_t C, typename S = double, typename F>
  requires CarrierFunction<F, HDual<C, S>>
void sc_hess_vec(const F& f, std::span<const double> a, std::span<const double> in,
                 std::span<double> out) {
  const std::size_t n = a.size();
  check_dimension(f, n);
  check_chunk(n, C);
  detail::check_hvp_shapes(n, in.size(), out.size());
  const std::size_t nchunk = n / C;
  std::vector<HDual<C, S>> y(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t scn = i / C;
    for (std::size_t cn = scn; cn < nchunk; ++cn) {
      const std::size_t cstart = cn * C;
      seed_chunk<C, S>(std::span(y), a, i, cstart);
      const HDual<C, S> temp = f(std::span<const HDual<C, S>>(y));
      for (std::size_t l = 0; l < C; ++l) {
        const std::size_t s = cstart + l;
        const double h = to_double(temp[C + 2 + l]);
        out[i] = out[i] + h * in[s];
        if (cn > scn) out[s] = out[s] + h * in[i];
      }
    }
  }
}

template <std::size_t C, typename S = double, typename F>
  requires CarrierFunction<F, HDual<C, S>>
std::vector<double> sc_hess_vec(const F& f, std::span<const double> a,
                                std::span<const double> in) {
  std::vector<double> out(a.size());
  sc_hess_vec<C, S>(f, a, in, std::span(out));
  return out;
}

}  // namespace chessfad
