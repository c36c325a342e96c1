// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file hdual.hpp
 * @brief Chunked second-order dual numbers.
 *
 * An HDual<C> carries one value, the first derivative with respect to a
 * "row" variable x_i, the first derivatives with respect to a contiguous
 * chunk of C "column" variables x_j .. x_{j+C-1}, and the C mixed second
 * derivatives d2f/dx_i dx_{j+l}:
 *
 *   v[0]            f
 *   v[1]            df/dx_i
 *   v[2 .. C+1]     df/dx_{j+l}
 *   v[C+2 .. 2C+1]  d2f/dx_i dx_{j+l}
 *
 * Every second-derivative slot C+k only ever reads slots {0, 1, k, C+k} of
 * its operands, so the value produced for a given Hessian entry does not
 * depend on how the columns were packed into chunks.
 */

#include <array>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>

namespace chessfad {

template <std::floating_point T>
constexpr T square(T x) {
  return x * x;
}

constexpr double to_double(double x) { return x; }

template <std::size_t C, typename S = double>
class HDual {
  static_assert(C >= 1, "chunk size must be positive");

 public:
  static constexpr std::size_t chunk_size = C;
  static constexpr std::size_t width = 2 * C + 2;
  using scalar_type = S;
  using storage_type = std::array<S, width>;

  constexpr HDual() : v_{} {}

  // Lifts a constant: all derivative slots are zero.
  constexpr HDual(double c) : v_{} { v_[0] = S(c); }  // NOLINT(google-explicit-constructor)

  explicit constexpr HDual(const storage_type& v) : v_(v) {}

  constexpr const S& operator[](std::size_t k) const { return v_[k]; }
  constexpr S& operator[](std::size_t k) { return v_[k]; }

  constexpr const storage_type& slots() const { return v_; }

  constexpr const S& value() const { return v_[0]; }
  constexpr const S& row_derivative() const { return v_[1]; }
  /// First derivative w.r.t. column l of the active chunk, 0 <= l < C.
  constexpr const S& column_derivative(std::size_t l) const { return v_[2 + l]; }
  /// Mixed second derivative for column l of the active chunk, 0 <= l < C.
  constexpr const S& second_derivative(std::size_t l) const { return v_[C + 2 + l]; }

  // Componentwise operations.

  friend constexpr HDual operator+(const HDual& u, const HDual& w) {
    HDual r;
    for (std::size_t k = 0; k < width; ++k) r.v_[k] = u.v_[k] + w.v_[k];
    return r;
  }

  friend constexpr HDual operator-(const HDual& u, const HDual& w) {
    HDual r;
    for (std::size_t k = 0; k < width; ++k) r.v_[k] = u.v_[k] - w.v_[k];
    return r;
  }

  friend constexpr HDual operator-(const HDual& u) {
    HDual r;
    for (std::size_t k = 0; k < width; ++k) r.v_[k] = -u.v_[k];
    return r;
  }

  friend constexpr HDual operator+(const HDual& u) { return u; }

  friend constexpr HDual operator*(const HDual& u, const HDual& w) {
    HDual r;
    r.v_[0] = u.v_[0] * w.v_[0];
    for (std::size_t k = 1; k <= C + 1; ++k) {
      r.v_[k] = u.v_[0] * w.v_[k] + w.v_[0] * u.v_[k];
    }
    for (std::size_t k = 2; k <= C + 1; ++k) {
      r.v_[C + k] = u.v_[0] * w.v_[C + k] + u.v_[1] * w.v_[k] +
                    w.v_[1] * u.v_[k] + w.v_[0] * u.v_[C + k];
    }
    return r;
  }

  friend constexpr HDual operator/(const HDual& u, const HDual& w) {
    HDual r;
    const S& w0 = w.v_[0];
    r.v_[0] = u.v_[0] / w0;
    for (std::size_t k = 1; k <= C + 1; ++k) {
      r.v_[k] = (u.v_[k] - r.v_[0] * w.v_[k]) / w0;
    }
    for (std::size_t k = 2; k <= C + 1; ++k) {
      r.v_[C + k] = (u.v_[C + k] - r.v_[1] * w.v_[k] - r.v_[k] * w.v_[1] -
                     r.v_[0] * w.v_[C + k]) /
                    w0;
    }
    return r;
  }

  // Mixed operations with a plain constant.

  friend constexpr HDual operator+(const HDual& u, double c) {
    HDual r(u);
    r.v_[0] = u.v_[0] + S(c);
    return r;
  }
  friend constexpr HDual operator+(double c, const HDual& u) {
    HDual r(u);
    r.v_[0] = S(c) + u.v_[0];
    return r;
  }
  friend constexpr HDual operator-(const HDual& u, double c) {
    HDual r(u);
    r.v_[0] = u.v_[0] - S(c);
    return r;
  }
  friend constexpr HDual operator-(double c, const HDual& u) {
    HDual r = -u;
    r.v_[0] = S(c) - u.v_[0];
    return r;
  }
  friend constexpr HDual operator*(const HDual& u, double c) {
    HDual r;
    for (std::size_t k = 0; k < width; ++k) r.v_[k] = S(c) * u.v_[k];
    return r;
  }
  friend constexpr HDual operator*(double c, const HDual& u) {
    HDual r;
    for (std::size_t k = 0; k < width; ++k) r.v_[k] = S(c) * u.v_[k];
    return r;
  }
  friend constexpr HDual operator/(const HDual& u, double c) {
    HDual r;
    for (std::size_t k = 0; k < width; ++k) r.v_[k] = u.v_[k] / S(c);
    return r;
  }
  friend constexpr HDual operator/(double c, const HDual& u) { return HDual(c) / u; }

  constexpr HDual& operator+=(const HDual& w) { return *this = *this + w; }
  constexpr HDual& operator-=(const HDual& w) { return *this = *this - w; }
  constexpr HDual& operator*=(const HDual& w) { return *this = *this * w; }
  constexpr HDual& operator/=(const HDual& w) { return *this = *this / w; }
  constexpr HDual& operator+=(double c) { return *this = *this + c; }
  constexpr HDual& operator-=(double c) { return *this = *this - c; }
  constexpr HDual& operator*=(double c) { return *this = *this * c; }
  constexpr HDual& operator/=(double c) { return *this = *this / c; }

  // Comparisons look at the value slot only.

  friend constexpr bool operator==(const HDual& u, const HDual& w) { return u.v_[0] == w.v_[0]; }
  friend constexpr bool operator==(const HDual& u, double c) { return u.v_[0] == S(c); }
  friend constexpr auto operator<=>(const HDual& u, const HDual& w) { return u.v_[0] <=> w.v_[0]; }
  friend constexpr auto operator<=>(const HDual& u, double c) { return u.v_[0] <=> S(c); }

  // Elementary functions: r = g(u0), r_k = g'(u0) u_k,
  // r_{C+k} = g'(u0) u_{C+k} + g''(u0) u_1 u_k.

  friend HDual sin(const HDual& u) {
    using std::cos;
    using std::sin;
    const S s = sin(u.v_[0]);
    return chain(u, s, cos(u.v_[0]), -s);
  }
  friend HDual cos(const HDual& u) {
    using std::cos;
    using std::sin;
    const S c = cos(u.v_[0]);
    return chain(u, c, -sin(u.v_[0]), -c);
  }
  friend HDual exp(const HDual& u) {
    using std::exp;
    const S e = exp(u.v_[0]);
    return chain(u, e, e, e);
  }
  friend HDual sqrt(const HDual& u) {
    using std::sqrt;
    const S s = sqrt(u.v_[0]);
    const S d1 = S(0.5) / s;
    return chain(u, s, d1, -(S(0.5) * d1) / u.v_[0]);
  }
  friend HDual log(const HDual& u) {
    using std::log;
    const S d1 = S(1.0) / u.v_[0];
    return chain(u, log(u.v_[0]), d1, -(d1 * d1));
  }
  // sign(0) = 0; the second derivative is taken as zero everywhere.
  friend HDual abs(const HDual& u) {
    const S zero(0.0);
    const S sign = u.v_[0] > zero ? S(1.0) : (u.v_[0] < zero ? S(-1.0) : zero);
    HDual r;
    using std::abs;
    r.v_[0] = abs(u.v_[0]);
    for (std::size_t k = 1; k <= C + 1; ++k) r.v_[k] = sign * u.v_[k];
    for (std::size_t k = 2; k <= C + 1; ++k) r.v_[C + k] = sign * u.v_[C + k];
    return r;
  }
  friend constexpr HDual square(const HDual& u) { return u * u; }

  friend std::ostream& operator<<(std::ostream& os, const HDual& u) {
    os << '<';
    for (std::size_t k = 0; k < width; ++k) os << (k ? ", " : "") << u.v_[k];
    return os << '>';
  }

 private:
  static HDual chain(const HDual& u, const S& g0, const S& g1, const S& g2) {
    HDual r;
    r.v_[0] = g0;
    for (std::size_t k = 1; k <= C + 1; ++k) r.v_[k] = g1 * u.v_[k];
    for (std::size_t k = 2; k <= C + 1; ++k) {
      r.v_[C + k] = g1 * u.v_[C + k] + g2 * u.v_[1] * u.v_[k];
    }
    return r;
  }

  storage_type v_;
};

template <std::size_t C, typename S = double>
constexpr HDual<C, S> lift_constant(double c) {
  return HDual<C, S>(c);
}

template <typename T>
inline constexpr bool is_hdual_v = false;
template <std::size_t C, typename S>
inline constexpr bool is_hdual_v<HDual<C, S>> = true;

}  // namespace chessfad
