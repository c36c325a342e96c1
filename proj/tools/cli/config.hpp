// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chessfad/batch.hpp"
#include "chessfad/testfuncs.hpp"

namespace chessfad::cli {

/// Bad flags, inconsistent sizes, unreadable inputs. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { validate, hessian, hvp, bench, opcount };
enum class FuncName { rosenbrock, ackley, fletcher_powell, prodsum };
enum class Mode { full, sym, chunk, schunk };
enum class Format { csv, json };

std::string_view to_string(FuncName f);
std::string_view to_string(Mode m);
std::string_view to_string(Format f);
FuncName parse_func(std::string_view name);
Mode parse_mode(std::string_view name);
Format parse_format(std::string_view name);

/// Flags as typed on the command line, before defaults and cross-checks.
struct RawOptions {
  std::string func;
  std::optional<std::size_t> n;
  std::optional<std::size_t> csize;
  std::string mode;
  std::string level = "seq";
  std::optional<std::size_t> m;
  std::uint64_t seed = 42;
  unsigned workers = 0;
  std::string point;
  std::string point_file;
  std::string vec;
  std::string vec_file;
  std::string n_sweep;
  bool all_divisors = false;
  bool with_gradient = false;
  std::string fp_params;
  std::string fp_params_out;
  std::string output;
  std::string format;
};

struct RunConfig {
  Command command = Command::validate;
  FuncName func = FuncName::rosenbrock;
  std::size_t n = 0;
  std::optional<std::size_t> csize;
  Mode mode = Mode::chunk;
  Level level = Level::seq;
  std::size_t m = 1;
  std::uint64_t seed = 42;
  unsigned workers = 0;
  /// Sizes to run: the single n, or the --n-sweep list.
  std::vector<std::size_t> sizes;
  /// Explicit instances; empty means seeded-random.
  std::vector<std::vector<double>> points;
  std::vector<std::vector<double>> vectors;
  bool all_divisors = false;
  bool with_gradient = false;
  /// Replayed Fletcher-Powell parameters; otherwise generated from the seed.
  std::optional<FletcherPowellParams> fp_params;
  std::string fp_params_out;
  std::string output;
  Format format = Format::csv;
};

/// Applies per-command defaults and checks the invariants.
RunConfig resolve(Command command, const RawOptions& raw);

/// The chunk size to use at n: --csize if given, else optimal_chunk(n).
std::size_t chunk_for(const RunConfig& config, std::size_t n);

/// One comma-separated row of reals.
std::vector<double> parse_row(std::string_view text);
/// One row per non-blank line.
std::vector<std::vector<double>> read_rows(const std::string& path);
/// "a:b:s" -> a, a+s, ... <= b.
std::vector<std::size_t> parse_sweep(std::string_view spec);

}  // namespace chessfad::cli
