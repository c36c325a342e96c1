// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include "chessfad/testfuncs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chessfad/random.hpp"

namespace chessfad {

namespace {

void compute_targets(FletcherPowellParams& p) {
  std::vector<double> sines(p.n), cosines(p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    sines[j] = std::sin(p.xstar[j]);
    cosines[j] = std::cos(p.xstar[j]);
  }
  p.estar.resize(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    p.estar[i] = fletcher_powell_term<double>(p, i, sines, cosines);
  }
}

}  // namespace

FletcherPowellParams make_fp_params(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("fletcher-powell needs n >= 1");
  FletcherPowellParams p;
  p.n = n;
  p.seed = seed;
  Rng rng(seed);
  p.a.resize(n * n);
  p.b.resize(n * n);
  for (int& x : p.a) x = static_cast<int>(rng.uniform_int(-100, 100));
  for (int& x : p.b) x = static_cast<int>(rng.uniform_int(-100, 100));
  p.xstar.resize(n);
  for (double& x : p.xstar) x = rng.uniform_open(-std::numbers::pi, std::numbers::pi);
  compute_targets(p);
  return p;
}

void to_json(nlohmann::json& j, const FletcherPowellParams& p) {
  auto matrix = [&](const std::vector<int>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < p.n; ++i) {
      rows.push_back(std::vector<int>(m.begin() + i * p.n, m.begin() + (i + 1) * p.n));
    }
    return rows;
  };
  j = nlohmann::json{{"n", p.n}, {"seed", p.seed}, {"A", matrix(p.a)}, {"B", matrix(p.b)},
                     {"xstar", p.xstar}};
}

void from_json(const nlohmann::json& j, FletcherPowellParams& p) {
  FletcherPowellParams r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.xstar = j.at("xstar").get<std::vector<double>>();
  r.n = r.xstar.size();
  if (r.n == 0) throw std::invalid_argument("xstar must not be empty");
  if (j.contains("n") && j.at("n").get<std::size_t>() != r.n) {
    throw std::invalid_argument("n does not match the length of xstar");
  }
  auto read_matrix = [&](const char* key, std::vector<int>& out) {
    const auto rows = j.at(key).get<std::vector<std::vector<int>>>();
    if (rows.size() != r.n) throw std::invalid_argument(std::string(key) + " must have n rows");
    out.clear();
    for (const auto& row : rows) {
      if (row.size() != r.n) throw std::invalid_argument(std::string(key) + " must be n x n");
      for (int x : row) {
        if (x < -100 || x > 100) {
          throw std::invalid_argument(std::string(key) + " entries must lie in [-100, 100]");
        }
        out.push_back(x);
      }
    }
  };
  read_matrix("A", r.a);
  read_matrix("B", r.b);
  for (double x : r.xstar) {
    if (!(x > -std::numbers::pi && x < std::numbers::pi)) {
      throw std::invalid_argument("xstar entries must lie in (-pi, pi)");
    }
  }
  compute_targets(r);
  p = std::move(r);
}

}  // namespace chessfad
