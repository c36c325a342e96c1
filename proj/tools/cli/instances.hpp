// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "cli/config.hpp"
#include "cli/functions.hpp"

namespace chessfad::cli {

struct Instances {
  std::vector<std::vector<double>> points;
  std::vector<std::vector<double>> vectors;
};

/// Explicit rows where given, the seeded random batch otherwise.
Instances make_instances(const RunConfig& config, bool with_vectors);

/// Writes the Fletcher-Powell parameters in use to --fp-params-out.
void maybe_dump_fp_params(const RunConfig& config, const AnyFunction& fn);

}  // namespace chessfad::cli
