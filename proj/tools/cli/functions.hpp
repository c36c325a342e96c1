// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <variant>

#include "chessfad/testfuncs.hpp"
#include "cli/config.hpp"

namespace chessfad::cli {

using AnyFunction = std::variant<Rosenbrock, Ackley, FletcherPowell, ProdSum>;

/// The configured function at dimension n. Fletcher-Powell parameters are
/// replayed if loaded, else drawn from the seed.
inline AnyFunction make_function(const RunConfig& config, std::size_t n) {
  switch (config.func) {
    case FuncName::rosenbrock: return Rosenbrock{};
    case FuncName::ackley: return Ackley{};
    case FuncName::prodsum: return ProdSum{};
    case FuncName::fletcher_powell:
      return FletcherPowell(config.fp_params ? *config.fp_params : make_fp_params(n, config.seed));
  }
  throw ConfigError("unknown function");
}

}  // namespace chessfad::cli
