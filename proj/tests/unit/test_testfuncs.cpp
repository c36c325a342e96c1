// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <vector>

#include <nlohmann/json.hpp>

#include "chessfad/counting.hpp"
#include "chessfad/finite_diff.hpp"
#include "chessfad/hessian.hpp"
#include "chessfad/random.hpp"
#include "chessfad/testfuncs.hpp"
#include "test_util.hpp"

using namespace chessfad;

namespace {

template <typename F>
double eval(const F& f, const std::vector<double>& y) {
  return f(std::span<const double>(y));
}

// Straight transcription of the Ackley formula, independent of the functor.
double ackley_ref(const std::vector<double>& y) {
  const double n = static_cast<double>(y.size());
  double sq = 0.0, cs = 0.0;
  for (double x : y) {
    sq += x * x;
    cs += std::cos(2.0 * std::numbers::pi * x);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

}  // namespace

TEST_CASE("rosenbrock values") {
  CHECK(eval(Rosenbrock{}, {1, 1}) == 0.0);
  CHECK(eval(Rosenbrock{}, {0, 0}) == 1.0);
  CHECK(eval(Rosenbrock{}, {1, 1, 1}) == 0.0);
  CHECK(eval(Rosenbrock{}, {-1, 1}) == 4.0);
  CHECK_THROWS_AS(eval(Rosenbrock{}, {1}), std::invalid_argument);
}

TEST_CASE("ackley values") {
  CHECK(std::abs(eval(Ackley{}, {0, 0, 0})) <= 1e-14);
  CHECK(std::abs(eval(Ackley{}, {0.5}) - ackley_ref({0.5})) <= 1e-14);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> y(5);
    for (double& x : y) x = rng.uniform(-3, 3);
    CHECK(rel_err(eval(Ackley{}, y), ackley_ref(y)) <= 1e-14);
  }
}

TEST_CASE("ackley Hessian matches finite differences away from the origin") {
  Rng rng(11);
  int checked = 0;
  while (checked < 10) {
    std::vector<double> y(4);
    for (double& x : y) x = rng.uniform(-2, 2);
    double norm = 0.0;
    for (double x : y) norm += x * x;
    if (std::sqrt(norm) <= 0.1) continue;
    ++checked;
    const auto h = chunk_hess<2>(Ackley{}, y).hessian;
    const auto fd = fd_hessian(Ackley{}, y);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) CHECK(within(h(i, j), fd(i, j), 1e-4, 1e-6));
    }
  }
}

TEST_CASE("prodsum values and structure") {
  CHECK(eval(ProdSum{}, {1, 2, 3, 4}) == 20.0);
  const std::vector<double> a = {0.3, -1.1, 2.0, 0.7, 1.4};
  const auto h = chunk_hess<1>(ProdSum{}, a).hessian;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const bool neighbor = (i + 1 == j) || (j + 1 == i);
      CHECK(h(i, j) == (neighbor ? 1.0 : 0.0));
    }
  }

  std::vector<CountingScalar> y = {1, 2, 3, 4};
  CountingSession session;
  (void)ProdSum{}(std::span<const CountingScalar>(y));
  CHECK(session.counts() == OpCount{3, 2});
  CHECK(ProdSum::multiplications(4) == 3);
  CHECK(ProdSum::additions(4) == 2);
}

TEST_CASE("plain evaluation equals the value slot") {
  Rng rng(12);
  std::vector<double> a(6);
  for (double& x : a) x = rng.uniform(-2, 2);
  const FletcherPowell fp(make_fp_params(6, 2));
  auto check = [&](const auto& f) {
    const auto y = chunk_init<3>(a, 2, 3);
    const auto h = f(std::span<const HDual<3>>(y));
    const double plain = eval(f, a);
    CHECK(bitwise_equal(std::span<const double>(&h[0], 1), std::span<const double>(&plain, 1)));
  };
  check(Rosenbrock{});
  check(Ackley{});
  check(ProdSum{});
  check(fp);
}

TEST_CASE("fletcher-powell parameters") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = make_fp_params(7, seed);
    REQUIRE(p.a.size() == 49);
    REQUIRE(p.b.size() == 49);
    for (int x : p.a) CHECK((x >= -100 && x <= 100));
    for (int x : p.b) CHECK((x >= -100 && x <= 100));
    for (double x : p.xstar) CHECK((x > -std::numbers::pi && x < std::numbers::pi));
    double target = 0.0;
    for (double e : p.estar) target += e * e;
    CHECK(eval(FletcherPowell(p), p.xstar) <= 1e-24 * target);
  }
  const auto p = make_fp_params(5, 17);
  const auto q = make_fp_params(5, 17);
  CHECK(p.a == q.a);
  CHECK(p.b == q.b);
  CHECK(bitwise_equal(p.xstar, q.xstar));
  CHECK(make_fp_params(5, 18).a != p.a);
  CHECK_THROWS_AS(make_fp_params(0, 1), std::invalid_argument);
}

TEST_CASE("fletcher-powell targets match a direct evaluation") {
  const auto p = make_fp_params(6, 4);
  for (std::size_t i = 0; i < 6; ++i) {
    double e = 0.0;
    for (std::size_t j = 0; j < 6; ++j) {
      e += p.a[i * 6 + j] * std::sin(p.xstar[j]) + p.b[i * 6 + j] * std::cos(p.xstar[j]);
    }
    CHECK(rel_err(p.estar[i], e) <= 1e-13);
  }
}

TEST_CASE("fletcher-powell Hessian is PSD at the minimizer") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto p = make_fp_params(6, seed);
    const auto h = chunk_hess<3>(FletcherPowell(p), p.xstar).hessian;
    Eigen::MatrixXd m(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = h(i, j);
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const double scale = m.norm();
    CHECK(es.eigenvalues().minCoeff() >= -1e-8 * scale);
  }
}

TEST_CASE("fletcher-powell JSON round trip") {
  const auto p = make_fp_params(4, 9);
  const nlohmann::json j = p;
  const auto q = j.get<FletcherPowellParams>();
  CHECK(q.n == p.n);
  CHECK(q.seed == p.seed);
  CHECK(q.a == p.a);
  CHECK(q.b == p.b);
  CHECK(bitwise_equal(q.xstar, p.xstar));
  CHECK(bitwise_equal(q.estar, p.estar));
  // Through text, too.
  const auto r = nlohmann::json::parse(j.dump()).get<FletcherPowellParams>();
  CHECK(bitwise_equal(r.xstar, p.xstar));
}

TEST_CASE("fletcher-powell JSON rejects bad input") {
  const nlohmann::json good = make_fp_params(3, 1);
  auto bad = good;
  bad["A"][0][0] = 101;
  CHECK_THROWS(bad.get<FletcherPowellParams>());
  bad = good;
  bad["B"].erase(2);
  CHECK_THROWS(bad.get<FletcherPowellParams>());
  bad = good;
  bad["xstar"][1] = 4.0;
  CHECK_THROWS(bad.get<FletcherPowellParams>());
  bad = good;
  bad["n"] = 4;
  CHECK_THROWS(bad.get<FletcherPowellParams>());
  bad = good;
  bad.erase("seed");
  CHECK_THROWS(bad.get<FletcherPowellParams>());
}

TEST_CASE("dimension mismatch is rejected") {
  const FletcherPowell fp(make_fp_params(3, 1));
  CHECK_THROWS_AS(eval(fp, {1, 2}), std::invalid_argument);
}
