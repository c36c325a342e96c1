// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace chessfad::cli {

/// Parses argv, runs the selected subcommand and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chessfad::cli
