// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <stdexcept>

#include "chessfad/counting.hpp"
#include "chessfad/opcount.hpp"

namespace chessfad {

void to_json(nlohmann::json& j, const OpCount& c) {
  j = nlohmann::json{{"mults", c.mults}, {"adds", c.adds}};
}

void from_json(const nlohmann::json& j, OpCount& c) {
  c.mults = j.at("mults").get<std::uint64_t>();
  c.adds = j.at("adds").get<std::uint64_t>();
}

CountingSession::CountingSession() {
  if (detail::tally.session_open) {
    throw std::logic_error("counting sessions cannot be nested");
  }
  detail::tally = detail::Tally{};
  detail::tally.session_open = true;
}

CountingSession::~CountingSession() { detail::tally.session_open = false; }

OpCount predict_chunk_counts(std::size_t n, std::size_t chunk, std::uint64_t mults,
                             std::uint64_t adds) {
  check_chunk(n, chunk);
  const std::uint64_t calls = static_cast<std::uint64_t>(n) * n / chunk;
  const std::uint64_t c = chunk;
  // (6 + 3/C) n^2 M  and  4 n^2 M + (2 + 2/C) n^2 A, kept in integers.
  return {calls * (6 * c + 3) * mults, 4 * calls * c * mults + calls * (2 * c + 2) * adds};
}

OpCount tally_chunk_counts(std::size_t n, std::size_t chunk, std::uint64_t mults,
                           std::uint64_t adds) {
  check_chunk(n, chunk);
  const std::uint64_t calls = static_cast<std::uint64_t>(n) * n / chunk;
  const std::uint64_t c = chunk;
  return {calls * (6 * c + 3) * mults, calls * ((4 * c + 1) * mults + (2 * c + 2) * adds)};
}

SchunkPrediction predict_schunk_counts(std::size_t n, std::size_t chunk, std::uint64_t mults) {
  check_chunk(n, chunk);
  const std::uint64_t nn = n;
  const std::uint64_t c = chunk;
  // n (n/C + 1) is always even, and 3 n (2n + 2C + n/C + 1) M / 2 equals
  // chunks * (6C + 3) * M.
  const std::uint64_t chunks = nn * (nn / c + 1) / 2;
  return {chunks, 3 * nn * (2 * nn + 2 * c + nn / c + 1) * mults / 2};
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::size_t optimal_chunk(std::size_t n) {
  if (n == 0) throw std::invalid_argument("optimal_chunk needs n >= 1");
  std::size_t best = 1;
  std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t c : divisors(n)) {
    const std::uint64_t cost = predict_schunk_counts(n, c, 1).mults;
    if (cost < best_cost) {
      best = c;
      best_cost = cost;
    }
  }
  return best;
}

double continuous_optimal_chunk(std::size_t n) { return std::sqrt(static_cast<double>(n) / 2.0); }

std::size_t nearest_divisor(std::size_t n, double x) {
  if (n == 0) throw std::invalid_argument("nearest_divisor needs n >= 1");
  std::size_t best = 1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t c : divisors(n)) {
    const double dist = std::abs(static_cast<double>(c) - x);
    if (dist < best_dist) {
      best = c;
      best_dist = dist;
    }
  }
  return best;
}

}  // namespace chessfad
