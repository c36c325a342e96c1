// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/app.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <stdexcept>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace chessfad::cli {

namespace {

void add_common(CLI::App& sub, RawOptions& o) {
  sub.add_option("--func", o.func, "rosenbrock | ackley | fletcher-powell | prodsum");
  sub.add_option("--n", o.n, "number of variables");
  sub.add_option("--csize", o.csize, "chunk size; must divide n (default: optimal for n)");
  sub.add_option("--seed", o.seed, "seed for random instances and Fletcher-Powell parameters");
  sub.add_option("--output", o.output, "write to this file instead of stdout");
  sub.add_option("--format", o.format, "csv | json");
  sub.add_option("--fp-params", o.fp_params, "replay Fletcher-Powell parameters from a JSON file");
  sub.add_option("--fp-params-out", o.fp_params_out, "save the Fletcher-Powell parameters used");
}

void add_instances(CLI::App& sub, RawOptions& o) {
  sub.add_option("--point", o.point, "comma-separated point");
  sub.add_option("--point-file", o.point_file, "one comma-separated point per line");
  sub.add_option("--m", o.m, "number of random instances");
}

void add_parallel(CLI::App& sub, RawOptions& o) {
  sub.add_option("--level", o.level, "seq | l0 | l1 | l2");
  sub.add_option("--workers", o.workers, "worker threads, 0 = hardware concurrency")
      ->envname("CHESSFAD_WORKERS");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chunked hyper-dual Hessians and Hessian-vector products"};
  app.name("chessfad");
  app.require_subcommand(1);

  RawOptions o;
  Command command = Command::validate;

  auto* validate = app.add_subcommand("validate", "run the property suite; exit 0 iff all checks pass");
  add_common(*validate, o);
  add_instances(*validate, o);
  add_parallel(*validate, o);
  validate->callback([&] { command = Command::validate; });

  auto* hessian = app.add_subcommand("hessian", "print the Hessian at one or more points");
  add_common(*hessian, o);
  add_instances(*hessian, o);
  hessian->add_option("--mode", o.mode, "full | sym | chunk | schunk");
  hessian->add_flag("--with-gradient", o.with_gradient, "append the gradient row (csv)");
  hessian->callback([&] { command = Command::hessian; });

  auto* hvp = app.add_subcommand("hvp", "print Hessian-vector products");
  add_common(*hvp, o);
  add_instances(*hvp, o);
  add_parallel(*hvp, o);
  hvp->add_option("--mode", o.mode, "chunk | schunk");
  hvp->add_option("--vec", o.vec, "comma-separated multiplicand");
  hvp->add_option("--vec-file", o.vec_file, "one multiplicand per line");
  hvp->callback([&] { command = Command::hvp; });

  auto* bench = app.add_subcommand("bench", "time batched products; one CSV record per n");
  add_common(*bench, o);
  add_parallel(*bench, o);
  bench->add_option("--m", o.m, "number of random instances (default 1000)");
  bench->add_option("--mode", o.mode, "chunk");
  bench->add_option("--n-sweep", o.n_sweep, "a:b:s, run n = a, a+s, ... <= b");
  bench->callback([&] { command = Command::bench; });

  auto* opcount = app.add_subcommand("opcount", "measured vs predicted scalar operation counts");
  add_common(*opcount, o);
  opcount->add_option("--n-sweep", o.n_sweep, "a:b:s");
  opcount->add_flag("--all-divisors", o.all_divisors, "every supported divisor of n");
  opcount->callback([&] { command = Command::opcount; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RunConfig config = resolve(command, o);
    switch (command) {
      case Command::validate: return cmd_validate(config, out, err);
      case Command::hessian: return cmd_hessian(config, out, err);
      case Command::hvp: return cmd_hvp(config, out, err);
      case Command::bench: return cmd_bench(config, out, err);
      case Command::opcount: return cmd_opcount(config, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chessfad::cli
