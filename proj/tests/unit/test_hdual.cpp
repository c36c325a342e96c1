// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "chessfad/counting.hpp"
#include "chessfad/finite_diff.hpp"
#include "chessfad/hdual.hpp"
#include "chessfad/hessian.hpp"
#include "chessfad/random.hpp"
#include "test_util.hpp"

using namespace chessfad;

using HD1 = HDual<1>;
using HD2 = HDual<2>;

TEST_CASE("lift_constant zeroes every derivative slot") {
  CHECK(same_slots(lift_constant<1>(5.0), {5, 0, 0, 0}));
  CHECK(same_slots(lift_constant<2>(0.0), {0, 0, 0, 0, 0, 0}));
  CHECK(same_slots(lift_constant<1>(-3.5), {-3.5, 0, 0, 0}));
  CHECK(HD2::width == 6);
  CHECK(sizeof(HDual<4>) == 10 * sizeof(double));
}

TEST_CASE("add is componentwise") {
  CHECK(same_slots(HD1{{1, 2, 3, 4}} + HD1{{10, 20, 30, 40}}, {11, 22, 33, 44}));
  const HD1 u{{1.5, -2, 7, 0.25}};
  CHECK(same_slots(u + lift_constant<1>(0), {1.5, -2, 7, 0.25}));
  CHECK(same_slots(HD2{{1, 1, 0, 0, 0, 0}} + HD2{{2, 0, 1, 0, 0, 0}}, {3, 1, 1, 0, 0, 0}));
  CHECK(same_slots(HD1{{1, 2, 3, 4}} - HD1{{10, 20, 30, 40}}, {-9, -18, -27, -36}));
  CHECK(same_slots(-HD1{{1, -2, 3, 0}}, {-1, 2, -3, -0.0}));
}

TEST_CASE("mul applies the second-order product rule") {
  // x^2 at x = 2 seeded with i == j: value 4, slopes 4, curvature 2.
  CHECK(same_slots(HD1{{2, 1, 1, 0}} * HD1{{2, 1, 1, 0}}, {4, 4, 4, 2}));
  // 3*5 + 1*1 + 0*0 + 2*2 = 20
  CHECK(same_slots(HD1{{3, 1, 0, 2}} * HD1{{2, 0, 1, 5}}, {6, 2, 3, 20}));
  const HD1 u{{0.3, -1.25, 4, 9}};
  CHECK(same_slots(u * lift_constant<1>(1), {0.3, -1.25, 4, 9}));
}

TEST_CASE("mul commutes to rounding") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    HDual<3> u, w;
    for (std::size_t k = 0; k < HDual<3>::width; ++k) {
      u[k] = rng.uniform(-3, 3);
      w[k] = rng.uniform(-3, 3);
    }
    const auto p = u * w;
    const auto q = w * u;
    for (std::size_t k = 0; k < HDual<3>::width; ++k) {
      CHECK(std::abs(p[k] - q[k]) <= 1e-15 * std::max(1.0, std::abs(p[k])) * 4);
    }
  }
}

TEST_CASE("div applies the quotient rule") {
  CHECK(same_slots(HD1{{6, 0, 0, 0}} / HD1{{2, 0, 0, 0}}, {3, 0, 0, 0}));
  // 1/x at x = 2: -1/x^2 = -0.25, 2/x^3 = 0.25
  CHECK(same_slots(HD1{{1, 0, 0, 0}} / HD1{{2, 1, 1, 0}}, {0.5, -0.25, -0.25, 0.25}));

  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    HD1 u{{rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 2)}};
    HD1 w{{3.0, rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 2)}};
    const HD1 back = (u / w) * w;
    for (std::size_t k = 0; k < 4; ++k) CHECK(rel_err(back[k], u[k]) <= 1e-12);
  }
}

TEST_CASE("division by a zero-valued dual propagates IEEE values") {
  const HD1 r = HD1{{1, 1, 0, 0}} / HD1{{0, 1, 1, 0}};
  CHECK(std::isinf(r[0]));
  CHECK(!std::isfinite(r[1]));
}

TEST_CASE("elementary functions") {
  CHECK(same_slots(sin(HD1{{0, 1, 1, 0}}), {0, 1, 1, 0}));

  const HD1 s = sin(HD1{{std::numbers::pi / 2, 1, 1, 0}});
  CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(s[1]) < 1e-15);
  CHECK(std::abs(s[2]) < 1e-15);
  CHECK(s[3] == doctest::Approx(-1.0).epsilon(1e-15));

  CHECK(same_slots(exp(HD1{{0, 1, 1, 0}}), {1, 1, 1, 1}));

  // cos at 0: <1, 0, 0, -1>
  CHECK(same_slots(cos(HD1{{0, 1, 1, 0}}), {1, -0.0, -0.0, -1}));
  // sqrt at 4: 2, 1/4, -1/32
  CHECK(same_slots(sqrt(HD1{{4, 1, 1, 0}}), {2, 0.25, 0.25, -1.0 / 32}));
  // log at 2: log 2, 1/2, -1/4
  CHECK(same_slots(log(HD1{{2, 1, 1, 0}}), {std::log(2.0), 0.5, 0.5, -0.25}));
  CHECK(same_slots(square(HD1{{3, 1, 1, 0}}), {9, 6, 6, 2}));
}

TEST_CASE("abs uses sign(0) = 0 and zero curvature") {
  CHECK(same_slots(abs(HD1{{-2, 1, 3, 5}}), {2, -1, -3, -5}));
  CHECK(same_slots(abs(HD1{{2, 1, 3, 5}}), {2, 1, 3, 5}));
  CHECK(same_slots(abs(HD1{{0, 1, 3, 5}}), {0, 0, 0, 0}));
}

TEST_CASE("sqrt and log outside their domain give NaN") {
  const HD1 r = sqrt(HD1{{-1, 1, 1, 0}});
  CHECK(std::isnan(r[0]));
  const HD1 l = log(HD1{{-1, 1, 1, 0}});
  CHECK(std::isnan(l[0]));
  const HD1 z = sqrt(HD1{{0, 0, 0, 0}});
  CHECK(z[0] == 0.0);
  CHECK(std::isnan(z[1]));  // inf * 0
}

TEST_CASE("mixed scalar operations") {
  CHECK(same_slots(HD1{{2, 1, 1, 0}} + 3.0, {5, 1, 1, 0}));
  CHECK(same_slots(3.0 + HD1{{2, 1, 1, 0}}, {5, 1, 1, 0}));
  CHECK(same_slots(2.0 * HD1{{2, 1, 1, 0}}, {4, 2, 2, 0}));
  CHECK(same_slots(HD1{{2, 1, 1, 0}} * 2.0, {4, 2, 2, 0}));
  CHECK(same_slots(HD1{{4, 2, 2, 0}} / 2.0, {2, 1, 1, 0}));
  CHECK(same_slots(HD1{{2, 1, 1, 0}} - 3.0, {-1, 1, 1, 0}));
  CHECK(same_slots(3.0 - HD1{{2, 1, 1, 0}}, {1, -1, -1, -0.0}));
  CHECK(same_slots(1.0 / HD1{{2, 1, 1, 0}}, {0.5, -0.25, -0.25, 0.25}));

  HD1 acc{{1, 1, 0, 0}};
  acc += 1.0;
  acc *= 3.0;
  CHECK(same_slots(acc, {6, 3, 0, 0}));
}

TEST_CASE("comparisons look at the value only") {
  CHECK(HD1{{2, 9, 9, 9}} < HD1{{3, 0, 0, 0}});
  CHECK(HD1{{2, 1, 0, 0}} >= 2.0);
  CHECK_FALSE(HD1{{-1, 5, 5, 5}} > HD1{{-1, 0, 0, 0}});
  CHECK(HD1{{-1, 5, 5, 5}} == HD1{{-1, 0, 0, 0}});
  CHECK(HD1{{-1, 5, 5, 5}} <= -1.0);
  CHECK(1.0 > HD1{{0.5, 7, 7, 7}});
  CHECK(HD1{{0.5, 7, 7, 7}} != 2.0);
}

TEST_CASE("slot-level operation counts") {
  auto count_mul = []<std::size_t C>(std::integral_constant<std::size_t, C>) {
    HDual<C, CountingScalar> u(2.0), w(3.0);
    CountingSession session;
    (void)(u * w);
    return session.counts();
  };
  auto count_add = []<std::size_t C>(std::integral_constant<std::size_t, C>) {
    HDual<C, CountingScalar> u(2.0), w(3.0);
    CountingSession session;
    (void)(u + w);
    return session.counts();
  };
  // Multiplications: 6C+3. Additions: C+1 first-order sums and 3C in the
  // second-order slots, i.e. 4C+1.
  CHECK(count_mul(std::integral_constant<std::size_t, 1>{}) == OpCount{9, 5});
  CHECK(count_mul(std::integral_constant<std::size_t, 2>{}) == OpCount{15, 9});
  CHECK(count_mul(std::integral_constant<std::size_t, 4>{}) == OpCount{27, 17});
  CHECK(count_mul(std::integral_constant<std::size_t, 7>{}) == OpCount{45, 29});
  CHECK(count_add(std::integral_constant<std::size_t, 1>{}) == OpCount{0, 4});
  CHECK(count_add(std::integral_constant<std::size_t, 4>{}) == OpCount{0, 10});
}

namespace {

// A smooth composite of every operation, away from abs kinks and the
// sqrt/log boundaries for x in [0.5, 1.5]^3.
struct Composite {
  template <typename T>
  T operator()(std::span<const T> x) const {
    using std::abs;
    using std::cos;
    using std::exp;
    using std::log;
    using std::sin;
    using std::sqrt;
    const T a = sin(x[0] * x[1]) + exp(x[2]) / (1.0 + x[0] * x[0]);
    const T b = sqrt(x[1] + 2.0) * log(x[2] + 1.0) - cos(x[0] - x[2]);
    const T c = abs(x[1] - 3.0) * square(x[2]) + 2.0 / (x[0] + x[1]);
    return a * b + c - 0.5 * x[2];
  }
};

}  // namespace

TEST_CASE("derivative slots agree with central differences") {
  const Composite f;
  Rng rng(2024);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> a = {rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5),
                                   rng.uniform(0.5, 1.5)};
    const auto g = fd_gradient(f, a);
    const auto h = fd_hessian(f, a);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t cstart = 0; cstart < 3; ++cstart) {
        const auto y = chunk_init<1>(a, i, cstart);
        const HD1 r = f(std::span<const HD1>(y));
        CHECK(r[0] == f(std::span<const double>(a)));
        CHECK(rel_err(r[1], g[i]) <= 1e-6);
        CHECK(rel_err(r[2], g[cstart]) <= 1e-6);
        CHECK(rel_err(r[3], h(i, cstart)) <= 1e-4);
      }
    }
  }
}

TEST_CASE("row derivative is duplicated into its chunk slot") {
  const Composite f;
  const std::vector<double> a = {0.7, 1.1, 0.9};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto y = chunk_init<3>(a, i, 0);
    const HDual<3> r = f(std::span<const HDual<3>>(y));
    CHECK(bitwise_equal(r[1], r[2 + i]));
  }
}
