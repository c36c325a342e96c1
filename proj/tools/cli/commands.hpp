// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "cli/config.hpp"

namespace chessfad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Each command writes its result to out (or --output) and diagnostics to
// err, and returns the process exit code.
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_hessian(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_hvp(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_opcount(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace chessfad::cli
