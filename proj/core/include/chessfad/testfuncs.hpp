// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file testfuncs.hpp
 * @brief Scalable benchmark functions, generic over the carrier type.
 *
 * Each functor evaluates on plain doubles, long doubles, HDual<C, S> and
 * CountingScalar alike. Bodies only use the operations HDual overloads.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "chessfad/hdual.hpp"

namespace chessfad {

/// sum_{i<n-1} 100 (y_{i+1} - y_i^2)^2 + (1 - y_i)^2
struct Rosenbrock {
  template <typename T>
  T operator()(std::span<const T> y) const {
    if (y.size() < 2) throw std::invalid_argument("rosenbrock needs n >= 2");
    T sum = 100.0 * square(y[1] - square(y[0])) + square(1.0 - y[0]);
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
      sum = sum + (100.0 * square(y[i + 1] - square(y[i])) + square(1.0 - y[i]));
    }
    return sum;
  }
};

/**
 * -20 exp(-0.2 sqrt(mean y_i^2)) - exp(mean cos(2 pi y_i)) + 20 + e.
 * Derivatives are NaN at the origin, where sqrt is not differentiable.
 */
struct Ackley {
  template <typename T>
  T operator()(std::span<const T> y) const {
    using std::cos;
    using std::exp;
    using std::sqrt;
    if (y.empty()) throw std::invalid_argument("ackley needs n >= 1");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double inv_n = 1.0 / static_cast<double>(y.size());
    T sq = square(y[0]);
    T cs = cos(two_pi * y[0]);
    for (std::size_t i = 1; i < y.size(); ++i) {
      sq = sq + square(y[i]);
      cs = cs + cos(two_pi * y[i]);
    }
    return -20.0 * exp(-0.2 * sqrt(inv_n * sq)) - exp(inv_n * cs) + 20.0 + std::numbers::e;
  }
};

/// sum_{i<n-1} y_i y_{i+1}: n-1 multiplications, n-2 additions, no constants.
struct ProdSum {
  template <typename T>
  T operator()(std::span<const T> y) const {
    if (y.size() < 2) throw std::invalid_argument("prodsum needs n >= 2");
    T sum = y[0] * y[1];
    for (std::size_t i = 1; i + 1 < y.size(); ++i) sum = sum + y[i] * y[i + 1];
    return sum;
  }

  static constexpr std::uint64_t multiplications(std::size_t n) { return n - 1; }
  static constexpr std::uint64_t additions(std::size_t n) { return n - 2; }
};

struct FletcherPowellParams {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<int> a;  // n x n, row-major, entries in [-100, 100]
  std::vector<int> b;
  std::vector<double> xstar;  // entries in (-pi, pi)
  std::vector<double> estar;  // E_i(xstar)
};

/// E_i(y) = sum_j A_ij sin(y_j) + B_ij cos(y_j), given sin/cos of y.
template <typename T>
T fletcher_powell_term(const FletcherPowellParams& p, std::size_t i, std::span<const T> sines,
                       std::span<const T> cosines) {
  const int* ai = p.a.data() + i * p.n;
  const int* bi = p.b.data() + i * p.n;
  T e = static_cast<double>(ai[0]) * sines[0] + static_cast<double>(bi[0]) * cosines[0];
  for (std::size_t j = 1; j < p.n; ++j) {
    e = e + (static_cast<double>(ai[j]) * sines[j] + static_cast<double>(bi[j]) * cosines[j]);
  }
  return e;
}

/**
 * Deterministic parameters from a seed: A and B drawn uniformly from the
 * integers [-100, 100], then xstar uniformly from (-pi, pi), all from one
 * Rng(seed) stream in that order (A row-major, then B, then xstar).
 */
FletcherPowellParams make_fp_params(std::size_t n, std::uint64_t seed);

void to_json(nlohmann::json& j, const FletcherPowellParams& p);
/// Recomputes estar; rejects out-of-range or inconsistently sized fields.
void from_json(const nlohmann::json& j, FletcherPowellParams& p);

/// sum_i (estar_i - E_i(y))^2
class FletcherPowell {
 public:
  explicit FletcherPowell(FletcherPowellParams params)
      : params_(std::make_shared<const FletcherPowellParams>(std::move(params))) {}

  const FletcherPowellParams& params() const { return *params_; }
  std::size_t dimension() const { return params_->n; }

  template <typename T>
  T operator()(std::span<const T> y) const {
    using std::cos;
    using std::sin;
    const auto& p = *params_;
    if (y.size() != p.n) throw std::invalid_argument("fletcher-powell dimension mismatch");
    std::vector<T> sines(p.n), cosines(p.n);
    for (std::size_t j = 0; j < p.n; ++j) {
      sines[j] = sin(y[j]);
      cosines[j] = cos(y[j]);
    }
    T sum = square(p.estar[0] - fletcher_powell_term<T>(p, 0, sines, cosines));
    for (std::size_t i = 1; i < p.n; ++i) {
      sum = sum + square(p.estar[i] - fletcher_powell_term<T>(p, i, sines, cosines));
    }
    return sum;
  }

 private:
  std::shared_ptr<const FletcherPowellParams> params_;
};

}  // namespace chessfad
