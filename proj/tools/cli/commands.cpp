// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <variant>

#include <nlohmann/json.hpp>

#include "chessfad/chunk_dispatch.hpp"
#include "chessfad/hessian.hpp"
#include "chessfad/hvp.hpp"
#include "chessfad/opcount.hpp"
#include "cli/functions.hpp"
#include "cli/instances.hpp"
#include "cli/output.hpp"

namespace chessfad::cli {

namespace {

using nlohmann::json;

template <typename F>
HessianResult run_hessian(const F& f, Mode mode, std::size_t c, std::span<const double> a) {
  switch (mode) {
    case Mode::full: return hessian_full(f, a);
    case Mode::sym: return hessian_sym(f, a);
    case Mode::chunk:
      return dispatch_chunk(c, [&](auto cc) { return chunk_hess<decltype(cc)::value>(f, a); });
    case Mode::schunk:
      return dispatch_chunk(c, [&](auto cc) { return schunk_hess<decltype(cc)::value>(f, a); });
  }
  throw ConfigError("unknown mode");
}

json matrix_json(const HessianMatrix& h) {
  json rows = json::array();
  for (std::size_t i = 0; i < h.dimension(); ++i) {
    const auto r = h.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return rows;
}

json csize_json(Mode mode, std::size_t c) {
  return (mode == Mode::full || mode == Mode::sym) ? json(nullptr) : json(c);
}

void write_json_line(std::ostream& os, const json& j) { os << j.dump() << '\n'; }

}  // namespace

int cmd_hessian(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const std::size_t n = config.n;
  const std::size_t c = chunk_for(config, n);
  const AnyFunction fn = make_function(config, n);
  maybe_dump_fp_params(config, fn);
  const Instances inst = make_instances(config, false);

  OutputSink sink(out, config.output, false);
  auto& os = sink.stream();
  for (const auto& a : inst.points) {
    const HessianResult r = std::visit([&](const auto& f) { return run_hessian(f, config.mode, c, a); }, fn);
    if (config.format == Format::csv) {
      for (std::size_t i = 0; i < n; ++i) write_csv_row(os, r.hessian.row(i));
      if (config.with_gradient) write_csv_row(os, std::span<const double>(r.gradient));
    } else {
      write_json_line(os, {{"func", to_string(config.func)},
                           {"n", n},
                           {"mode", to_string(config.mode)},
                           {"csize", csize_json(config.mode, c)},
                           {"point", a},
                           {"hessian", matrix_json(r.hessian)},
                           {"gradient", r.gradient}});
    }
  }
  return kExitOk;
}

int cmd_hvp(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const std::size_t n = config.n;
  const std::size_t c = chunk_for(config, n);
  const AnyFunction fn = make_function(config, n);
  maybe_dump_fp_params(config, fn);
  const Instances inst = make_instances(config, true);

  BatchData batch(inst.points.size(), n);
  for (std::size_t e = 0; e < batch.m; ++e) {
    std::copy(inst.points[e].begin(), inst.points[e].end(), batch.a.begin() + e * n);
    std::copy(inst.vectors[e].begin(), inst.vectors[e].end(), batch.in.begin() + e * n);
  }
  std::visit(
      [&](const auto& f) {
        dispatch_chunk(c, [&](auto cc) {
          constexpr std::size_t C = decltype(cc)::value;
          if (config.mode == Mode::schunk) {
            for (std::size_t e = 0; e < batch.m; ++e) {
              sc_hess_vec<C>(f, batch.point(e), batch.vector(e), batch.result(e));
            }
          } else {
            batch_hvp<C>(config.level, f, batch, {.workers = config.workers});
          }
        });
      },
      fn);

  OutputSink sink(out, config.output, false);
  auto& os = sink.stream();
  for (std::size_t e = 0; e < batch.m; ++e) {
    const auto r = batch.result(e);
    if (config.format == Format::csv) {
      write_csv_row(os, std::span<const double>(r));
    } else {
      write_json_line(os, {{"func", to_string(config.func)},
                           {"n", n},
                           {"mode", to_string(config.mode)},
                           {"csize", c},
                           {"level", to_string(config.level)},
                           {"point", inst.points[e]},
                           {"vec", inst.vectors[e]},
                           {"out", std::vector<double>(r.begin(), r.end())}});
    }
  }
  return kExitOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  static const std::vector<std::string> kColumns = {
      "func", "n", "csize", "mode", "level", "m", "workers", "wall_time_ns", "time_per_instance_ns",
      "checksum"};
  OutputSink sink(out, config.output, true);
  auto& os = sink.stream();
  if (config.format == Format::csv && sink.fresh()) write_csv_row(os, kColumns);

  const unsigned workers = config.level == Level::seq ? 1 : resolve_workers(config.workers);
  for (std::size_t n : config.sizes) {
    const std::size_t c = chunk_for(config, n);
    const AnyFunction fn = make_function(config, n);
    maybe_dump_fp_params(config, fn);
    BatchData batch = make_random_batch(config.m, n, config.seed);

    const auto t0 = std::chrono::steady_clock::now();
    std::visit(
        [&](const auto& f) {
          dispatch_chunk(c, [&](auto cc) {
            batch_hvp<decltype(cc)::value>(config.level, f, batch, {.workers = workers});
          });
        },
        fn);
    const auto t1 = std::chrono::steady_clock::now();
    const auto wall = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    const double per = config.m == 0 ? 0.0 : static_cast<double>(wall) / static_cast<double>(config.m);
    const double checksum = batch.checksum();

    if (config.format == Format::csv) {
      const std::vector<std::string> row = {std::string(to_string(config.func)),
                                            std::to_string(n),
                                            std::to_string(c),
                                            std::string(to_string(config.mode)),
                                            std::string(to_string(config.level)),
                                            std::to_string(config.m),
                                            std::to_string(workers),
                                            std::to_string(wall),
                                            format_double(per),
                                            format_double(checksum)};
      write_csv_row(os, row);
    } else {
      write_json_line(os, {{"func", to_string(config.func)},
                           {"n", n},
                           {"csize", c},
                           {"mode", to_string(config.mode)},
                           {"level", to_string(config.level)},
                           {"m", config.m},
                           {"workers", workers},
                           {"wall_time_ns", wall},
                           {"time_per_instance_ns", per},
                           {"checksum", checksum}});
    }
    os.flush();
  }
  return kExitOk;
}

int cmd_opcount(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  static const std::vector<std::string> kColumns = {
      "func",           "n",           "csize",   "measured_mults",        "measured_adds",
      "predicted_mults", "predicted_adds", "match", "mults_match", "schunk_measured_mults",
      "schunk_predicted_mults", "optimal_csize"};
  const bool strict = config.func == FuncName::prodsum;
  OutputSink sink(out, config.output, false);
  auto& os = sink.stream();
  if (config.format == Format::csv) write_csv_row(os, kColumns);

  for (std::size_t n : config.sizes) {
    const AnyFunction fn = make_function(config, n);
    maybe_dump_fp_params(config, fn);
    std::vector<std::size_t> chunks;
    if (config.csize && !config.all_divisors) {
      chunks = {*config.csize};
    } else {
      for (std::size_t c : divisors(n)) {
        if (is_dispatchable_chunk(c)) chunks.push_back(c);
      }
    }
    const std::size_t best = optimal_chunk(n);
    const std::uint64_t m = strict ? ProdSum::multiplications(n) : 0;
    const std::uint64_t a = strict ? ProdSum::additions(n) : 0;

    for (std::size_t c : chunks) {
      OpCount measured;
      std::uint64_t sym_measured = 0;
      std::visit(
          [&](const auto& f) {
            dispatch_chunk(c, [&](auto cc) {
              constexpr std::size_t C = decltype(cc)::value;
              measured = count_chunk_hess<C>(f, n, m, a, strict);
              sym_measured = count_schunk_hess<C>(f, n).mults;
            });
          },
          fn);

      json row = {{"func", to_string(config.func)},
                  {"n", n},
                  {"csize", c},
                  {"measured_mults", measured.mults},
                  {"measured_adds", measured.adds},
                  {"predicted_mults", nullptr},
                  {"predicted_adds", nullptr},
                  {"match", nullptr},
                  {"mults_match", nullptr},
                  {"schunk_measured_mults", sym_measured},
                  {"schunk_predicted_mults", nullptr},
                  {"optimal_csize", best}};
      if (strict) {
        const OpCount predicted = predict_chunk_counts(n, c, m, a);
        const auto sym_predicted = predict_schunk_counts(n, c, m).mults;
        row["predicted_mults"] = predicted.mults;
        row["predicted_adds"] = predicted.adds;
        row["match"] = measured == predicted && sym_measured == sym_predicted;
        row["mults_match"] = measured.mults == predicted.mults && sym_measured == sym_predicted;
        row["schunk_predicted_mults"] = sym_predicted;
      }

      if (config.format == Format::json) {
        write_json_line(os, row);
        continue;
      }
      std::vector<std::string> fields;
      for (const auto& key : kColumns) {
        const json& v = row[key];
        if (v.is_null()) {
          fields.emplace_back();
        } else if (v.is_string()) {
          fields.push_back(v.get<std::string>());
        } else {
          fields.push_back(v.dump());
        }
      }
      write_csv_row(os, fields);
    }
  }
  return kExitOk;
}

}  // namespace chessfad::cli
