// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

// The validate property suite. Each check reports a status (pass, fail,
// xfail, skip), the largest error it observed and the tolerance it used.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "chessfad/batch.hpp"
#include "chessfad/chunk_dispatch.hpp"
#include "chessfad/finite_diff.hpp"
#include "chessfad/hessian.hpp"
#include "chessfad/hvp.hpp"
#include "chessfad/opcount.hpp"
#include "chessfad/random.hpp"
#include "cli/commands.hpp"
#include "cli/functions.hpp"
#include "cli/instances.hpp"
#include "cli/output.hpp"

namespace chessfad::cli {

namespace {

constexpr double kFdHessRel = 1e-4;
constexpr double kFdHessAbs = 1e-6;
constexpr double kFdGradRel = 1e-6;
constexpr double kFdGradAbs = 1e-6;
constexpr double kExplicitRel = 1e-12;
constexpr double kSymRel = 1e-10;
constexpr double kLinearityRel = 1e-12;
constexpr int kHvpTrials = 20;

struct Check {
  std::string name;
  std::string status;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

Check verdict(std::string name, bool ok, double err, double tol, std::string detail = {}) {
  return {std::move(name), ok ? "pass" : "fail", err, tol, std::move(detail)};
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); }

double upper_max_diff(const HessianMatrix& a, const HessianMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = i; j < a.dimension(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  }
  return m;
}

double max_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

bool has_nan(const HessianMatrix& h) {
  return std::ranges::any_of(h.data(), [](double x) { return std::isnan(x); });
}

template <std::size_t C, typename F>
std::vector<Check> run_checks(const F& f, const RunConfig& config, std::span<const double> a,
                              bool singular) {
  const std::size_t n = a.size();
  std::vector<Check> checks;

  {
    const auto full = hessian_full(f, a).hessian;
    const auto sym = hessian_sym(f, a).hessian;
    const auto chunk = chunk_hess<C>(f, a).hessian;
    const auto schunk = schunk_hess<C>(f, a).hessian;
    const bool ok = upper_bitwise_equal(full, sym) && upper_bitwise_equal(full, chunk) &&
                    upper_bitwise_equal(full, schunk) && bitwise_symmetric(sym) &&
                    bitwise_symmetric(schunk);
    const double err = std::max({upper_max_diff(full, sym), upper_max_diff(full, chunk),
                                 upper_max_diff(full, schunk)});
    checks.push_back(verdict("engine_equivalence", ok, err, 0.0, "full, sym, chunk, schunk; bitwise"));
  }

  {
    const auto ref = chunk_hess<1>(f, a);
    bool ok = true;
    double err = 0.0;
    std::string sizes;
    for (std::size_t c : divisors(n)) {
      if (!is_dispatchable_chunk(c)) continue;
      sizes += (sizes.empty() ? "" : " ") + std::to_string(c);
      dispatch_chunk(c, [&](auto cc) {
        const auto r = chunk_hess<decltype(cc)::value>(f, a);
        ok = ok && bitwise_equal(r.hessian, ref.hessian) && bitwise_equal(r.gradient, ref.gradient);
        err = std::max(err, max_diff(r.hessian.data(), ref.hessian.data()));
      });
    }
    checks.push_back(verdict("chunk_invariance", ok, err, 0.0, "chunk sizes " + sizes + "; bitwise"));
  }

  {
    CallCounter<F> counted(f);
    bool ok = true;
    auto expect = [&](std::size_t want) {
      ok = ok && counted.calls() == want;
      counted.reset();
    };
    (void)hessian_full(counted, a);
    expect(full_evaluations(n));
    (void)hessian_sym(counted, a);
    expect(sym_evaluations(n));
    (void)chunk_hess<C>(counted, a);
    expect(chunk_evaluations(n, C));
    (void)schunk_hess<C>(counted, a);
    expect(schunk_evaluations(n, C));
    checks.push_back(verdict("evaluation_counts", ok, 0.0, 0.0, "n^2, n(n+1)/2, n^2/C, n(n/C+1)/2"));
  }

  const auto res = chunk_hess<C>(f, a);
  if (singular) {
    const bool nan = has_nan(res.hessian);
    checks.push_back({"ackley_origin_singularity", nan ? "xfail" : "fail",
                      std::numeric_limits<double>::quiet_NaN(), 0.0,
                      nan ? "derivatives are NaN at the origin (sqrt singularity), as documented"
                          : "expected NaN derivatives at the origin"});
    checks.push_back({"fd_hessian", "skip", 0.0, kFdHessRel, "not differentiable at this point"});
    checks.push_back({"fd_gradient", "skip", 0.0, kFdGradRel, "not differentiable at this point"});
  } else {
    const auto fd = fd_hessian(f, a);
    const auto g = fd_gradient(f, a);
    bool ok = true;
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double e = std::abs(res.hessian(i, j) - fd(i, j));
        ok = ok && (e <= kFdHessRel * std::abs(fd(i, j)) || (std::abs(fd(i, j)) < 1.0 && e <= kFdHessAbs));
        err = std::max(err, std::isnan(e) ? e : rel_err(res.hessian(i, j), fd(i, j)));
      }
    }
    checks.push_back(verdict("fd_hessian", ok, err, kFdHessRel,
                             "relative, absolute 1e-06 below magnitude 1"));
    ok = true;
    err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = std::abs(res.gradient[i] - g[i]);
      ok = ok && (e <= kFdGradRel * std::abs(g[i]) || (std::abs(g[i]) < 1.0 && e <= kFdGradAbs));
      err = std::max(err, std::isnan(e) ? e : rel_err(res.gradient[i], g[i]));
    }
    checks.push_back(verdict("fd_gradient", ok, err, kFdGradRel,
                             "relative, absolute 1e-06 below magnitude 1"));
  }

  {
    Rng rng(config.seed + 1);
    auto draw = [&](double lo, double hi) {
      std::vector<double> v(n);
      for (double& x : v) x = rng.uniform(lo, hi);
      return v;
    };
    double explicit_err = 0.0, sym_err = 0.0, lin_err = 0.0;
    for (int t = 0; t < kHvpTrials; ++t) {
      const auto p = draw(-2, 2);
      const auto v = draw(-1, 1);
      const auto w = draw(-1, 1);
      const double alpha = rng.uniform(-2, 2);
      const double beta = rng.uniform(-2, 2);
      const auto hv = chunk_hess<C>(f, p).hessian.multiply(v);
      const auto cv = chess_vec<C>(f, p, v);
      const auto sv = sc_hess_vec<C>(f, p, v);
      const auto cw = chess_vec<C>(f, p, w);
      std::vector<double> mix(n);
      for (std::size_t k = 0; k < n; ++k) mix[k] = alpha * v[k] + beta * w[k];
      const auto cm = chess_vec<C>(f, p, mix);
      for (std::size_t i = 0; i < n; ++i) {
        explicit_err = std::max(explicit_err, rel_err(cv[i], hv[i]));
        sym_err = std::max(sym_err, rel_err(sv[i], hv[i]));
        lin_err = std::max(lin_err, rel_err(cm[i], alpha * cv[i] + beta * cw[i]));
      }
    }
    const std::string trials = std::to_string(kHvpTrials) + " random (point, vector) pairs";
    checks.push_back(verdict("hvp_explicit", explicit_err <= kExplicitRel, explicit_err, kExplicitRel, trials));
    checks.push_back(verdict("hvp_symmetric", sym_err <= kSymRel, sym_err, kSymRel, trials));
    checks.push_back(verdict("hvp_linearity", lin_err <= kLinearityRel, lin_err, kLinearityRel, trials));
  }

  {
    const BatchData input = make_random_batch(config.m, n, config.seed);
    BatchData ref = input;
    seq_batch_hvp<C>(f, ref);
    std::vector<unsigned> worker_counts = {1, 3, resolve_workers(config.workers)};
    std::ranges::sort(worker_counts);
    worker_counts.erase(std::unique(worker_counts.begin(), worker_counts.end()), worker_counts.end());
    bool ok = true;
    double err = 0.0;
    std::string ws;
    for (unsigned w : worker_counts) ws += (ws.empty() ? "" : " ") + std::to_string(w);
    for (Level level : {Level::l0, Level::l1, Level::l2}) {
      for (unsigned w : worker_counts) {
        BatchData b = input;
        std::vector<std::atomic<std::uint32_t>> visits(task_count(level, b.m, n, C));
        batch_hvp<C>(level, f, b, {.workers = w, .visits = visits});
        ok = ok && bitwise_equal(b.out, ref.out);
        ok = ok && std::ranges::all_of(visits, [](const auto& v) { return v.load() == 1; });
        err = std::max(err, max_diff(b.out, ref.out));
      }
    }
    checks.push_back(verdict("batch_levels", ok, err, 0.0,
                             "m=" + std::to_string(config.m) + ", seq vs l0 l1 l2, workers " + ws +
                                 "; bitwise, every task once"));
  }

  if (n >= 2) {
    const auto m = ProdSum::multiplications(n);
    const auto adds = ProdSum::additions(n);
    const OpCount measured = count_chunk_hess<C>(ProdSum{}, n, m, adds);
    const OpCount tally = tally_chunk_counts(n, C, m, adds);
    const OpCount closed = predict_chunk_counts(n, C, m, adds);
    const auto sym_measured = count_schunk_hess<C>(ProdSum{}, n).mults;
    const auto sym_predicted = predict_schunk_counts(n, C, m).mults;
    const bool ok = measured == tally && measured.mults == closed.mults && sym_measured == sym_predicted;
    const double err = std::abs(static_cast<double>(measured.adds) - static_cast<double>(tally.adds)) +
                       std::abs(static_cast<double>(measured.mults) - static_cast<double>(closed.mults));
    auto u = [](std::uint64_t v) { return std::to_string(v); };
    checks.push_back(verdict("operation_counts", ok, err, 0.0,
                             "prodsum: measured (" + u(measured.mults) + ", " + u(measured.adds) +
                                 "), per-operation model (" + u(tally.mults) + ", " + u(tally.adds) +
                                 "), closed form (" + u(closed.mults) + ", " + u(closed.adds) +
                                 "); symmetric mults " + u(sym_measured) + " vs " + u(sym_predicted)));
  } else {
    checks.push_back({"operation_counts", "skip", 0.0, 0.0, "prodsum needs n >= 2"});
  }
  return checks;
}

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::size_t n = config.n;
  const std::size_t c = chunk_for(config, n);
  const AnyFunction fn = make_function(config, n);
  maybe_dump_fp_params(config, fn);
  const Instances inst = make_instances(config, false);
  const auto& a = inst.points.front();
  const bool singular =
      config.func == FuncName::ackley && std::ranges::all_of(a, [](double x) { return x == 0.0; });

  const auto checks = std::visit(
      [&](const auto& f) {
        return dispatch_chunk(c, [&](auto cc) {
          return run_checks<decltype(cc)::value>(f, config, std::span<const double>(a), singular);
        });
      },
      fn);

  const auto failed = std::ranges::find_if(checks, [](const Check& k) { return k.status == "fail"; });
  OutputSink sink(out, config.output, false);
  auto& os = sink.stream();
  if (config.format == Format::json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& k : checks) {
      list.push_back({{"name", k.name},
                      {"status", k.status},
                      {"max_error", number_or_null(k.max_error)},
                      {"tolerance", k.tolerance},
                      {"detail", k.detail}});
    }
    os << nlohmann::json{{"func", to_string(config.func)},
                         {"n", n},
                         {"csize", c},
                         {"seed", config.seed},
                         {"point", a},
                         {"checks", list},
                         {"passed", failed == checks.end()}}
              .dump(2)
       << '\n';
  } else {
    const std::vector<std::string> header = {"name", "status", "max_error", "tolerance", "detail"};
    write_csv_row(os, header);
    for (const auto& k : checks) {
      const std::vector<std::string> row = {k.name, k.status, format_double(k.max_error),
                                            format_double(k.tolerance), k.detail};
      write_csv_row(os, row);
    }
  }
  if (failed != checks.end()) {
    err << "check failed: " << failed->name << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace chessfad::cli
