// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Central-difference oracles. They only evaluate f on plain floating-point
// carriers and share no code with the HDual engines. The evaluation type
// defaults to long double so that rounding in f does not swamp the O(h^2)
// truncation error.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "chessfad/function.hpp"
#include "chessfad/hessian_matrix.hpp"

namespace chessfad {

inline constexpr double kFdGradientStep = 1e-5;
inline constexpr double kFdHessianStep = 1e-4;

namespace detail {

inline double scaled_step(double h, double x) { return h * std::max(1.0, std::abs(x)); }

}  // namespace detail

template <typename Eval = long double, typename F>
  requires CarrierFunction<F, Eval>
std::vector<double> fd_gradient(const F& f, std::span<const double> a,
                                double h = kFdGradientStep) {
  const std::size_t n = a.size();
  std::vector<Eval> x(a.begin(), a.end());
  std::vector<double> g(n);
  auto eval = [&] { return static_cast<Eval>(f(std::span<const Eval>(x))); };
  for (std::size_t i = 0; i < n; ++i) {
    const Eval hi = detail::scaled_step(h, a[i]);
    x[i] = Eval(a[i]) + hi;
    const Eval fp = eval();
    x[i] = Eval(a[i]) - hi;
    const Eval fm = eval();
    x[i] = Eval(a[i]);
    g[i] = static_cast<double>((fp - fm) / (2 * hi));
  }
  return g;
}

template <typename Eval = long double, typename F>
  requires CarrierFunction<F, Eval>
HessianMatrix fd_hessian(const F& f, std::span<const double> a, double h = kFdHessianStep) {
  const std::size_t n = a.size();
  std::vector<Eval> x(a.begin(), a.end());
  HessianMatrix hess(n);
  auto eval_at = [&](std::size_t i, Eval di, std::size_t j, Eval dj) {
    x[i] += di;
    x[j] += dj;
    const Eval v = static_cast<Eval>(f(std::span<const Eval>(x)));
    x[i] = Eval(a[i]);
    x[j] = Eval(a[j]);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Eval hi = detail::scaled_step(h, a[i]);
    for (std::size_t j = i; j < n; ++j) {
      const Eval hj = detail::scaled_step(h, a[j]);
      const Eval pp = eval_at(i, hi, j, hj);
      const Eval pm = eval_at(i, hi, j, -hj);
      const Eval mp = eval_at(i, -hi, j, hj);
      const Eval mm = eval_at(i, -hi, j, -hj);
      const double v = static_cast<double>((pp - pm - mp + mm) / (4 * hi * hj));
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }
  return hess;
}

}  // namespace chessfad
