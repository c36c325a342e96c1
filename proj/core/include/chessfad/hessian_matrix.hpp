// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chessfad {

/// Dense n x n real64 matrix, row-major.
class HessianMatrix {
 public:
  HessianMatrix() = default;
  explicit HessianMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t dimension() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  std::span<const double> data() const { return data_; }

  /// Explicit product H * v, accumulated left to right per row.
  std::vector<double> multiply(std::span<const double> v) const {
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      double res = 0.0;
      for (std::size_t j = 0; j < n_; ++j) res = res + (*this)(i, j) * v[j];
      out[i] = res;
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

inline bool bitwise_equal(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

inline bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!bitwise_equal(a[k], b[k])) return false;
  }
  return true;
}

inline bool bitwise_equal(const HessianMatrix& a, const HessianMatrix& b) {
  return a.dimension() == b.dimension() && bitwise_equal(a.data(), b.data());
}

/// Upper triangles (j >= i) agree bit for bit.
inline bool upper_bitwise_equal(const HessianMatrix& a, const HessianMatrix& b) {
  if (a.dimension() != b.dimension()) return false;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = i; j < a.dimension(); ++j) {
      if (!bitwise_equal(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

inline bool bitwise_symmetric(const HessianMatrix& h) {
  for (std::size_t i = 0; i < h.dimension(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!bitwise_equal(h(i, j), h(j, i))) return false;
    }
  }
  return true;
}

}  // namespace chessfad
