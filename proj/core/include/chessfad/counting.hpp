// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>

#include <nlohmann/json.hpp>

namespace chessfad {

/// Exact tallies of scalar multiplications and additions.
struct OpCount {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;

  friend constexpr OpCount operator+(OpCount a, OpCount b) {
    return {a.mults + b.mults, a.adds + b.adds};
  }
  friend constexpr bool operator==(const OpCount&, const OpCount&) = default;
  friend std::ostream& operator<<(std::ostream& os, const OpCount& c) {
    return os << "{mults: " << c.mults << ", adds: " << c.adds << '}';
  }
};

void to_json(nlohmann::json& j, const OpCount& c);
void from_json(const nlohmann::json& j, OpCount& c);

namespace detail {

struct Tally {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
  // Divisions, elementary functions and negations.
  std::uint64_t others = 0;
  bool session_open = false;
};

inline thread_local Tally tally;

}  // namespace detail

/**
 * Scopes a counting run on the calling thread. Counts start at zero when the
 * session opens. Sessions cannot nest, and a session only sees operations
 * executed on its own thread.
 */
class CountingSession {
 public:
  CountingSession();
  ~CountingSession();
  CountingSession(const CountingSession&) = delete;
  CountingSession& operator=(const CountingSession&) = delete;

  OpCount counts() const { return {detail::tally.mults, detail::tally.adds}; }
  std::uint64_t other_ops() const { return detail::tally.others; }
};

/**
 * A real64 wrapper whose arithmetic is bit-identical to plain double but
 * bumps a thread-local tally: one mult per `*`, one add per `+` or `-`.
 * Copies and comparisons are free.
 */
class CountingScalar {
 public:
  constexpr CountingScalar() = default;
  constexpr CountingScalar(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr double value() const { return value_; }

  friend CountingScalar operator+(CountingScalar a, CountingScalar b) {
    ++detail::tally.adds;
    return a.value_ + b.value_;
  }
  friend CountingScalar operator-(CountingScalar a, CountingScalar b) {
    ++detail::tally.adds;
    return a.value_ - b.value_;
  }
  friend CountingScalar operator*(CountingScalar a, CountingScalar b) {
    ++detail::tally.mults;
    return a.value_ * b.value_;
  }
  friend CountingScalar operator/(CountingScalar a, CountingScalar b) {
    ++detail::tally.others;
    return a.value_ / b.value_;
  }
  friend CountingScalar operator-(CountingScalar a) {
    ++detail::tally.others;
    return -a.value_;
  }

  CountingScalar& operator+=(CountingScalar b) { return *this = *this + b; }
  CountingScalar& operator-=(CountingScalar b) { return *this = *this - b; }
  CountingScalar& operator*=(CountingScalar b) { return *this = *this * b; }
  CountingScalar& operator/=(CountingScalar b) { return *this = *this / b; }

  friend constexpr bool operator==(CountingScalar a, CountingScalar b) { return a.value_ == b.value_; }
  friend constexpr auto operator<=>(CountingScalar a, CountingScalar b) { return a.value_ <=> b.value_; }

  friend CountingScalar sin(CountingScalar a) { return other(std::sin(a.value_)); }
  friend CountingScalar cos(CountingScalar a) { return other(std::cos(a.value_)); }
  friend CountingScalar exp(CountingScalar a) { return other(std::exp(a.value_)); }
  friend CountingScalar sqrt(CountingScalar a) { return other(std::sqrt(a.value_)); }
  friend CountingScalar log(CountingScalar a) { return other(std::log(a.value_)); }
  friend CountingScalar abs(CountingScalar a) { return other(std::abs(a.value_)); }
  friend CountingScalar square(CountingScalar a) { return a * a; }

  friend constexpr double to_double(CountingScalar a) { return a.value_; }

  friend std::ostream& operator<<(std::ostream& os, CountingScalar a) { return os << a.value_; }

 private:
  static CountingScalar other(double v) {
    ++detail::tally.others;
    return v;
  }

  double value_ = 0.0;
};

}  // namespace chessfad
