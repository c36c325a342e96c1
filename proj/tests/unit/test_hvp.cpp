// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chessfad/chunk_dispatch.hpp"
#include "chessfad/hessian.hpp"
#include "chessfad/hvp.hpp"
#include "chessfad/random.hpp"
#include "chessfad/testfuncs.hpp"
#include "test_util.hpp"

using namespace chessfad;

namespace {

struct Bilinear {
  template <typename T>
  T operator()(std::span<const T> y) const {
    return y[0] * y[1];
  }
};

struct SumOfSquares {
  template <typename T>
  T operator()(std::span<const T> y) const {
    T s = y[0] * y[0];
    for (std::size_t i = 1; i < y.size(); ++i) s = s + y[i] * y[i];
    return s;
  }
};

std::vector<double> uniform(std::size_t n, Rng& rng, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

}  // namespace

TEST_CASE("chess_vec closed-form cases") {
  const std::vector<double> ones = {1, 1};
  const auto out = chess_vec<1>(Rosenbrock{}, ones, ones);
  CHECK(out[0] == doctest::Approx(402).epsilon(1e-14));
  CHECK(out[1] == doctest::Approx(-200).epsilon(1e-14));

  const std::vector<double> zeros(8, 0.0);
  const std::vector<double> p = {0.3, -1.2, 0.8, 1.9, -0.4, 0.1, 1.1, -1.7};
  for (double x : chess_vec<2>(Rosenbrock{}, p, zeros)) CHECK(x == 0.0);

  const std::vector<double> xy = {4.5, -2.0};
  const std::vector<double> pq = {3.0, 7.0};
  const auto r = chess_vec<2>(Bilinear{}, xy, pq);
  CHECK(r[0] == 7.0);
  CHECK(r[1] == 3.0);
}

TEST_CASE("sc_hess_vec closed-form cases") {
  const std::vector<double> ones = {1, 1};
  const auto out = sc_hess_vec<1>(Rosenbrock{}, ones, ones);
  const auto ref = chess_vec<1>(Rosenbrock{}, ones, ones);
  CHECK(rel_err(out[0], ref[0]) <= 1e-12);
  CHECK(rel_err(out[1], ref[1]) <= 1e-12);

  Rng rng(8);
  const auto a = uniform(6, rng, -1, 1);
  const auto v = uniform(6, rng, -1, 1);
  const auto r = sc_hess_vec<3>(SumOfSquares{}, a, v);
  for (std::size_t i = 0; i < 6; ++i) CHECK(r[i] == doctest::Approx(2 * v[i]).epsilon(1e-15));
}

TEST_CASE("sc_hess_vec visits n(n/C+1)/2 chunks") {
  CallCounter<Rosenbrock> f(Rosenbrock{});
  const std::vector<double> a = {0.1, 0.2, 0.3, 0.4};
  const std::vector<double> v = {1, 2, 3, 4};
  (void)sc_hess_vec<2>(f, a, v);
  CHECK(f.calls() == 6);
  f.reset();
  (void)chess_vec<2>(f, a, v);
  CHECK(f.calls() == 8);
}

TEST_CASE("matrix-free product equals the explicit product") {
  const FletcherPowell fp(make_fp_params(8, 21));
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto a = uniform(8, rng, -2, 2);
    const auto v = uniform(8, rng, -1, 1);
    const auto explicit_r = chunk_hess<4>(fp, a).hessian.multiply(v);
    const auto free_r = chess_vec<4>(fp, a, v);
    // Same products summed in the same order.
    CHECK(bitwise_equal(explicit_r, free_r));
  }
}

TEST_CASE("chess_vec is chunk invariant") {
  Rng rng(6);
  const auto a = uniform(12, rng, -2, 2);
  const auto v = uniform(12, rng, -1, 1);
  const auto ref = chess_vec<1>(Ackley{}, a, v);
  for (std::size_t c : {2, 3, 4, 6, 12}) {
    dispatch_chunk(c, [&](auto cc) {
      CHECK(bitwise_equal(chess_vec<decltype(cc)::value>(Ackley{}, a, v), ref));
    });
  }
}

TEST_CASE("symmetric product agrees with the plain product") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto a = uniform(8, rng, -2, 2);
    const auto v = uniform(8, rng, -1, 1);
    const auto h = chunk_hess<2>(Rosenbrock{}, a).hessian;
    const auto plain = chess_vec<2>(Rosenbrock{}, a, v);
    const auto sym = sc_hess_vec<2>(Rosenbrock{}, a, v);
    for (std::size_t i = 0; i < 8; ++i) {
      double scale = 0.0;
      for (std::size_t j = 0; j < 8; ++j) scale += std::abs(h(i, j) * v[j]);
      CHECK(std::abs(plain[i] - sym[i]) <= 1e-10 * std::max(scale, 1e-300));
    }
  }
}

TEST_CASE("linearity") {
  Rng rng(9);
  const auto a = uniform(8, rng, -2, 2);
  const auto h = chunk_hess<4>(Ackley{}, a).hessian;
  for (int t = 0; t < 20; ++t) {
    const auto u = uniform(8, rng, -1, 1);
    const auto w = uniform(8, rng, -1, 1);
    const double alpha = rng.uniform(-2, 2);
    const double beta = rng.uniform(-2, 2);
    std::vector<double> mix(8);
    for (std::size_t k = 0; k < 8; ++k) mix[k] = alpha * u[k] + beta * w[k];
    const auto lhs = chess_vec<4>(Ackley{}, a, mix);
    const auto hu = chess_vec<4>(Ackley{}, a, u);
    const auto hw = chess_vec<4>(Ackley{}, a, w);
    for (std::size_t i = 0; i < 8; ++i) {
      double scale = 0.0;
      for (std::size_t j = 0; j < 8; ++j) {
        scale += std::abs(h(i, j)) * (std::abs(alpha * u[j]) + std::abs(beta * w[j]));
      }
      CHECK(std::abs(lhs[i] - (alpha * hu[i] + beta * hw[i])) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("output is overwritten, not accumulated") {
  const std::vector<double> a = {0.5, 0.5};
  const std::vector<double> v = {1, 0};
  std::vector<double> out = {123.0, -9.0};
  sc_hess_vec<1>(Rosenbrock{}, a, v, std::span(out));
  const auto ref = chess_vec<1>(Rosenbrock{}, a, v);
  CHECK(rel_err(out[0], ref[0]) <= 1e-12);
  CHECK(rel_err(out[1], ref[1]) <= 1e-12);
}

TEST_CASE("shape and chunk errors") {
  const std::vector<double> a(6, 0.1);
  const std::vector<double> v(6, 1.0);
  const std::vector<double> short_v(5, 1.0);
  CHECK_THROWS_AS(chess_vec<4>(Rosenbrock{}, a, v), std::invalid_argument);
  CHECK_THROWS_AS(sc_hess_vec<4>(Rosenbrock{}, a, v), std::invalid_argument);
  CHECK_THROWS_AS(chess_vec<2>(Rosenbrock{}, a, short_v), std::invalid_argument);
}
