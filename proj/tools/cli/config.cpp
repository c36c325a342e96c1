// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "chessfad/chunk_dispatch.hpp"
#include "chessfad/opcount.hpp"

namespace chessfad::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::size_t default_m(Command command) {
  switch (command) {
    case Command::bench: return 1000;
    case Command::validate: return 64;
    default: return 1;
  }
}

std::vector<std::vector<double>> rows_from(const std::string& inline_row, const std::string& path,
                                           const char* flag) {
  if (!inline_row.empty() && !path.empty()) {
    throw ConfigError(std::string("--") + flag + " and --" + flag + "-file are exclusive");
  }
  if (!inline_row.empty()) return {parse_row(inline_row)};
  if (!path.empty()) {
    auto rows = read_rows(path);
    if (rows.empty()) throw ConfigError(path + ": no rows");
    return rows;
  }
  return {};
}

std::size_t common_width(const std::vector<std::vector<double>>& rows, const char* what) {
  const std::size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) throw ConfigError(std::string(what) + " rows differ in length");
  }
  return width;
}

FletcherPowellParams load_fp_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return nlohmann::json::parse(in).get<FletcherPowellParams>();
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace

std::string_view to_string(FuncName f) {
  switch (f) {
    case FuncName::rosenbrock: return "rosenbrock";
    case FuncName::ackley: return "ackley";
    case FuncName::fletcher_powell: return "fletcher-powell";
    case FuncName::prodsum: return "prodsum";
  }
  return "?";
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::full: return "full";
    case Mode::sym: return "sym";
    case Mode::chunk: return "chunk";
    case Mode::schunk: return "schunk";
  }
  return "?";
}

std::string_view to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

FuncName parse_func(std::string_view name) {
  for (auto f : {FuncName::rosenbrock, FuncName::ackley, FuncName::fletcher_powell, FuncName::prodsum}) {
    if (to_string(f) == name) return f;
  }
  throw ConfigError("unknown function '" + std::string(name) + "'");
}

Mode parse_mode(std::string_view name) {
  for (auto m : {Mode::full, Mode::sym, Mode::chunk, Mode::schunk}) {
    if (to_string(m) == name) return m;
  }
  throw ConfigError("unknown mode '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ConfigError("unknown format '" + std::string(name) + "'");
}

std::vector<double> parse_row(std::string_view text) {
  std::vector<double> row;
  if (trim(text).empty()) throw ConfigError("empty row");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field = trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
      throw ConfigError("malformed number '" + std::string(field) + "'");
    }
    row.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return row;
}

std::vector<std::vector<double>> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      rows.push_back(parse_row(line));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

std::vector<std::size_t> parse_sweep(std::string_view spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ConfigError("--n-sweep expects a:b:s");
  const std::size_t a = parse_count(spec.substr(0, c1), "sweep start");
  const std::size_t b = parse_count(spec.substr(c1 + 1, c2 - c1 - 1), "sweep end");
  const std::size_t s = parse_count(spec.substr(c2 + 1), "sweep step");
  if (a == 0 || s == 0 || b < a) throw ConfigError("--n-sweep needs 1 <= a <= b and s >= 1");
  std::vector<std::size_t> sizes;
  for (std::size_t n = a; n <= b; n += s) sizes.push_back(n);
  return sizes;
}

RunConfig resolve(Command command, const RawOptions& raw) {
  RunConfig c;
  c.command = command;
  c.func = raw.func.empty() ? (command == Command::opcount ? FuncName::prodsum : FuncName::rosenbrock)
                            : parse_func(raw.func);
  c.format = raw.format.empty() ? (command == Command::validate ? Format::json : Format::csv)
                                : parse_format(raw.format);
  c.mode = raw.mode.empty() ? Mode::chunk : parse_mode(raw.mode);
  if (command == Command::hvp && (c.mode == Mode::full || c.mode == Mode::sym)) {
    throw ConfigError("hvp supports --mode chunk or schunk");
  }
  if (command == Command::bench && c.mode != Mode::chunk) {
    throw ConfigError("bench runs the chunked product; --mode must be chunk");
  }
  try {
    c.level = parse_level(raw.level);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.seed = raw.seed;
  c.workers = raw.workers;
  c.csize = raw.csize;
  c.all_divisors = raw.all_divisors;
  c.with_gradient = raw.with_gradient;
  c.fp_params_out = raw.fp_params_out;
  c.output = raw.output;

  c.points = rows_from(raw.point, raw.point_file, "point");
  c.vectors = rows_from(raw.vec, raw.vec_file, "vec");
  if (!c.vectors.empty() && command != Command::hvp) throw ConfigError("--vec only applies to hvp");
  if (!c.points.empty() && (command == Command::bench || command == Command::opcount)) {
    throw ConfigError("bench and opcount generate their own instances");
  }

  std::optional<std::size_t> n = raw.n;
  auto agree = [&](std::size_t width, const char* what) {
    if (n && *n != width) throw ConfigError(std::string(what) + " length does not match --n");
    n = width;
  };
  if (!c.points.empty()) agree(common_width(c.points, "point"), "point");
  if (!c.vectors.empty()) agree(common_width(c.vectors, "vec"), "vec");
  if (!raw.fp_params.empty()) {
    if (c.func != FuncName::fletcher_powell) throw ConfigError("--fp-params needs --func fletcher-powell");
    c.fp_params = load_fp_params(raw.fp_params);
    agree(c.fp_params->n, "fletcher-powell parameter");
  }

  if (!raw.n_sweep.empty()) {
    if (command != Command::bench && command != Command::opcount) {
      throw ConfigError("--n-sweep applies to bench and opcount");
    }
    if (n) throw ConfigError("--n-sweep and --n are exclusive");
    if (c.fp_params) throw ConfigError("--n-sweep cannot replay fixed parameters");
    c.sizes = parse_sweep(raw.n_sweep);
  } else {
    c.sizes = {n.value_or(8)};
  }
  c.n = c.sizes.front();

  const std::size_t min_n =
      (c.func == FuncName::rosenbrock || c.func == FuncName::prodsum) ? 2 : 1;
  for (std::size_t size : c.sizes) {
    if (size < min_n) {
      throw ConfigError(std::string(to_string(c.func)) + " needs n >= " + std::to_string(min_n));
    }
    if (c.csize) {
      if (*c.csize == 0 || size % *c.csize != 0) {
        throw ConfigError("--csize " + std::to_string(*c.csize) + " does not divide n = " +
                          std::to_string(size));
      }
      if (!is_dispatchable_chunk(*c.csize)) {
        throw ConfigError("--csize " + std::to_string(*c.csize) + " is not a supported chunk size");
      }
    }
  }

  // validate pins its point separately; --m only sizes the batch check.
  if (!c.points.empty() && command != Command::validate) {
    if (raw.m && *raw.m != c.points.size()) throw ConfigError("--m does not match the point rows");
    c.m = c.points.size();
  } else if (!c.vectors.empty()) {
    if (raw.m && *raw.m != c.vectors.size()) throw ConfigError("--m does not match the vec rows");
    c.m = c.vectors.size();
  } else {
    c.m = raw.m.value_or(default_m(command));
  }
  if (!c.vectors.empty() && !c.points.empty() && c.vectors.size() != c.points.size()) {
    throw ConfigError("point and vec row counts differ");
  }
  if (c.level != Level::seq && c.m == 0) throw ConfigError("parallel levels need --m >= 1");
  if (command == Command::hvp && c.mode == Mode::schunk && c.level != Level::seq) {
    throw ConfigError("--mode schunk runs sequentially; use --level seq");
  }
  return c;
}

std::size_t chunk_for(const RunConfig& config, std::size_t n) {
  if (config.csize) return *config.csize;
  const std::size_t best = optimal_chunk(n);
  if (is_dispatchable_chunk(best)) return best;
  std::size_t pick = 1;
  std::uint64_t cost = predict_schunk_counts(n, 1, 1).mults;
  for (std::size_t c : divisors(n)) {
    if (!is_dispatchable_chunk(c)) continue;
    const auto m = predict_schunk_counts(n, c, 1).mults;
    if (m < cost) {
      pick = c;
      cost = m;
    }
  }
  return pick;
}

}  // namespace chessfad::cli
