// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/instances.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace chessfad::cli {

namespace {

std::vector<std::vector<double>> split(const std::vector<double>& flat, std::size_t m, std::size_t n) {
  std::vector<std::vector<double>> rows(m);
  for (std::size_t e = 0; e < m; ++e) rows[e].assign(flat.begin() + e * n, flat.begin() + (e + 1) * n);
  return rows;
}

}  // namespace

Instances make_instances(const RunConfig& config, bool with_vectors) {
  const std::size_t n = config.n;
  Instances inst;
  const bool need_random = config.points.empty() || (with_vectors && config.vectors.empty());
  const std::size_t m = config.points.empty() ? config.m : config.points.size();
  const BatchData random = need_random ? make_random_batch(m, n, config.seed) : BatchData();
  inst.points = config.points.empty() ? split(random.a, m, n) : config.points;
  if (with_vectors) inst.vectors = config.vectors.empty() ? split(random.in, m, n) : config.vectors;
  return inst;
}

void maybe_dump_fp_params(const RunConfig& config, const AnyFunction& fn) {
  if (config.fp_params_out.empty()) return;
  const auto* fp = std::get_if<FletcherPowell>(&fn);
  if (fp == nullptr) throw ConfigError("--fp-params-out needs --func fletcher-powell");
  std::ofstream os(config.fp_params_out);
  if (!os) throw ConfigError("cannot open " + config.fp_params_out + " for writing");
  os << nlohmann::json(fp->params()).dump(2) << '\n';
}

}  // namespace chessfad::cli
