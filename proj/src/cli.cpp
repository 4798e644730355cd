// Copyright 2026 the corrbath authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrbath/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "corrbath/dynamics.hpp"
#include "corrbath/errors.hpp"
#include "corrbath/measures.hpp"
#include "corrbath/output.hpp"
#include "corrbath/scans.hpp"
#include "corrbath/spectra.hpp"
#include "corrbath/validate.hpp"

namespace corrbath::cli {

namespace {

using config::RunConfig;
using output::format_double;
using output::Table;

std::string cell(double v, int precision) { return format_double(v, precision); }

std::string maybe_cell(const std::optional<double>& v, int precision) {
  return v ? format_double(*v, precision) : std::string();
}

// One emit path for both formats so bodies stay byte-deterministic.
void emit_table(output::Manifest& manifest, const std::string& dir,
                const std::string& base, const Table& table,
                const std::string& format) {
  if (format == "csv") {
    manifest.write_file(dir, base + ".csv", output::render_csv(table),
                        table.rows.size());
    return;
  }
  std::string body = "{\n  \"columns\": [";
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) body += ", ";
    body += '"' + table.columns[c] + '"';
  }
  body += "],\n  \"rows\": [\n";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    body += "    [";
    for (size_t c = 0; c < table.rows[r].size(); ++c) {
      if (c) body += ", ";
      body += '"' + table.rows[r][c] + '"';
    }
    body += r + 1 < table.rows.size() ? "],\n" : "]\n";
  }
  body += "  ]\n}\n";
  manifest.write_file(dir, base + ".json", body, table.rows.size());
}

std::vector<double> physical_time_grid(const RunConfig& cfg) {
  // numeric.t_max counts in units of 1/r1.
  std::vector<double> times;
  const int n = cfg.numeric.time_points;
  const double t_end = cfg.numeric.t_max / cfg.model.r1;
  times.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    times.push_back(t_end * k / (n - 1));
  }
  return times;
}

linalg::DenseMatrix initial_density(const RunConfig& cfg,
                                    const model::RateSet& rates) {
  return dynamics::build_initial_state(
      cfg.initial_state.preset, cfg.model.n_spins, &rates,
      cfg.initial_state.bloch_vectors.empty()
          ? nullptr
          : &cfg.initial_state.bloch_vectors);
}

void run_spectrum(const RunConfig& cfg, output::Manifest& manifest,
                  const std::string& dir) {
  spectra::AnalyzeOptions opts;
  opts.tol_abs = cfg.numeric.tol_abs;
  opts.tol_rel = cfg.numeric.tol_rel;
  opts.kernel_tol = cfg.numeric.kernel_tol;
  const auto rows =
      scans::spectrum_cloud(cfg.model, cfg.spectrum.alphas, opts);

  Table table;
  table.columns = {"alpha", "re_lambda", "im_lambda", "is_zero_mode"};
  const int p = cfg.output.precision;
  for (const auto& r : rows) {
    table.rows.push_back({cell(r.alpha, p), cell(r.re, p), cell(r.im, p),
                          r.is_zero_mode ? "1" : "0"});
  }
  emit_table(manifest, dir, "spectrum", table, cfg.output.format);
}

void run_evolve(const RunConfig& cfg, output::Manifest& manifest,
                const std::string& dir) {
  const auto bundle = liouvillian::assemble_liouvillian(cfg.model);
  const auto rho0 = initial_density(cfg, bundle.rates);
  const auto times = physical_time_grid(cfg);
  dynamics::EvolveOptions eopts;
  eopts.dt = cfg.numeric.dt > 0 ? cfg.numeric.dt / cfg.model.r1 : 0.0;
  const auto traj = dynamics::evolve_full(bundle, rho0, times, eopts);

  Table table;
  table.columns = {"t",           "mz",      "mzz",         "mc",
                   "trace_defect", "min_eig", "concurrence", "entropy"};
  const int p = cfg.output.precision;
  const bool two_spin = cfg.model.n_spins == 2;
  for (size_t k = 0; k < traj.times.size(); ++k) {
    const auto x = dynamics::observables_from_density(traj.states[k]);
    const auto& d = traj.diagnostics[k];
    const double conc = two_spin
                            ? measures::concurrence(traj.states[k])
                            : std::numeric_limits<double>::quiet_NaN();
    table.rows.push_back({cell(traj.times[k] * cfg.model.r1, p), cell(x.mz, p),
                          cell(x.mzz, p), cell(x.mc, p),
                          cell(d.trace_defect, p), cell(d.min_eig, p),
                          cell(conc, p),
                          cell(measures::von_neumann_entropy(traj.states[k]),
                               p)});
  }
  manifest.note("initial_state_preset",
                dynamics::preset_name(cfg.initial_state.preset));
  emit_table(manifest, dir, "trajectory", table, cfg.output.format);
}

void run_steady(const RunConfig& cfg, output::Manifest& manifest,
                const std::string& dir) {
  const auto bundle = liouvillian::assemble_liouvillian(cfg.model);
  spectra::AnalyzeOptions opts;
  opts.tol_abs = cfg.numeric.tol_abs;
  opts.tol_rel = cfg.numeric.tol_rel;
  opts.kernel_tol = cfg.numeric.kernel_tol;
  const auto report = spectra::analyze(bundle, opts);

  Table table;
  table.columns = {"state_index", "mz",      "mzz",     "mc",
                   "entropy",     "purity",  "concurrence"};
  const int p = cfg.output.precision;
  const bool two_spin = cfg.model.n_spins == 2;
  for (size_t k = 0; k < report.steady_states.size(); ++k) {
    const auto& rho = report.steady_states[k];
    const auto x = dynamics::observables_from_density(rho);
    const double conc = two_spin ? measures::concurrence(rho)
                                 : std::numeric_limits<double>::quiet_NaN();
    table.rows.push_back({std::to_string(k), cell(x.mz, p), cell(x.mzz, p),
                          cell(x.mc, p),
                          cell(measures::von_neumann_entropy(rho), p),
                          cell(measures::purity(rho), p), cell(conc, p)});
  }
  manifest.note("zero_mode_count", static_cast<double>(report.zero_mode_count));
  manifest.note("adr", report.adr);
  manifest.note("gap", report.gap);
  manifest.note("tol_used", report.tol_used);
  emit_table(manifest, dir, "steady_states", table, cfg.output.format);
}

void run_sweep_temperature(const RunConfig& cfg, output::Manifest& manifest,
                           const std::string& dir) {
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(cfg.sweep.points));
  if (cfg.sweep.scale == "geometric") {
    double t = cfg.sweep.t_start;
    for (int k = 0; k < cfg.sweep.points; ++k) {
      grid.push_back(t);
      t /= cfg.sweep.factor;
    }
  } else {
    const double step =
        (cfg.sweep.t_start - cfg.sweep.t_min) / (cfg.sweep.points - 1);
    for (int k = 0; k < cfg.sweep.points; ++k) {
      grid.push_back(cfg.sweep.t_start - step * k);
    }
  }

  // The initial state fixes F on the critical row; build it once at the
  // template temperature.
  const auto rates0 = model::rates_from_spec(cfg.model);
  const auto rho0 = initial_density(cfg, rates0);
  const auto x0 = dynamics::observables_from_density(rho0);

  const auto result = scans::temperature_sweep(cfg.model, grid, x0);

  Table table;
  table.columns = {"temperature", "beta",    "alpha",   "m0",
                   "mz",          "mzz",     "mc",      "concurrence",
                   "entropy",     "dmz_dT",  "dmzz_dT", "dmc_dT"};
  const int p = cfg.output.precision;
  for (const auto& r : result.rows) {
    table.rows.push_back(
        {cell(r.temperature, p), cell(r.beta, p), cell(r.alpha, p),
         cell(r.m0, p), cell(r.mz, p), cell(r.mzz, p), cell(r.mc, p),
         cell(r.concurrence, p), cell(r.entropy, p), maybe_cell(r.dmz_dt, p),
         maybe_cell(r.dmzz_dt, p), maybe_cell(r.dmc_dt, p)});
  }
  manifest.note("initial_state_preset",
                dynamics::preset_name(cfg.initial_state.preset));
  manifest.note("x0_f", x0.mzz + x0.mc);
  emit_table(manifest, dir, "sweep_temperature", table, cfg.output.format);
}

void run_entropy_scan(const RunConfig& cfg, output::Manifest& manifest,
                      const std::string& dir) {
  std::vector<int> n_grid;
  for (int n = cfg.entropy_scan.n_min; n <= cfg.entropy_scan.n_max; ++n) {
    n_grid.push_back(n);
  }
  scans::EntropyScanOptions opts;
  opts.alpha_compare = cfg.entropy_scan.alpha_compare;
  opts.preset = cfg.initial_state.preset;
  opts.t_end = cfg.entropy_scan.t_end;
  opts.dt = cfg.entropy_scan.dt;
  const auto result = scans::entropy_vs_n(cfg.model, n_grid, opts);

  Table table;
  table.columns = {"n", "alpha", "entropy", "residual", "min_eig"};
  const int p = cfg.output.precision;
  for (const auto& r : result.rows) {
    table.rows.push_back({std::to_string(r.n_spins), cell(r.alpha, p),
                          cell(r.entropy, p), cell(r.residual, p),
                          cell(r.min_eig, p)});
  }
  manifest.note("initial_state_preset", dynamics::preset_name(opts.preset));
  emit_table(manifest, dir, "entropy_scan", table, cfg.output.format);
}

// Returns the number of failed checks.
int run_validate(const RunConfig& cfg, output::Manifest& manifest,
                 const std::string& dir) {
  const auto results = validate::run_invariant_suite();
  Table table;
  table.columns = {"check", "value", "threshold", "passed"};
  int failures = 0;
  std::printf("%-28s %-14s %-12s %s\n", "check", "value", "threshold",
              "status");
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    std::printf("%-28s %-14.3e %-12.1e %s\n", r.name.c_str(), r.value,
                r.threshold, r.passed ? "pass" : "FAIL");
    table.rows.push_back({r.name, cell(r.value, cfg.output.precision),
                          cell(r.threshold, 3), r.passed ? "1" : "0"});
  }
  emit_table(manifest, dir, "validate", table, cfg.output.format);
  return failures;
}

}  // namespace

void run(const RunConfig& cfg, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  output::Manifest manifest(cfg.subcommand, config::echo_config(cfg));
  manifest.note("tol_abs", cfg.numeric.tol_abs);
  manifest.note("tol_rel", cfg.numeric.tol_rel);
  manifest.note("kernel_tol", cfg.numeric.kernel_tol);
  manifest.note("dt", cfg.numeric.dt);

  int failures = 0;
  if (cfg.subcommand == "spectrum") {
    run_spectrum(cfg, manifest, out_dir);
  } else if (cfg.subcommand == "evolve") {
    run_evolve(cfg, manifest, out_dir);
  } else if (cfg.subcommand == "steady") {
    run_steady(cfg, manifest, out_dir);
  } else if (cfg.subcommand == "sweep-temperature") {
    run_sweep_temperature(cfg, manifest, out_dir);
  } else if (cfg.subcommand == "entropy-scan") {
    run_entropy_scan(cfg, manifest, out_dir);
  } else if (cfg.subcommand == "validate") {
    failures = run_validate(cfg, manifest, out_dir);
  } else {
    throw ValidationError("unknown subcommand: " + cfg.subcommand);
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  manifest.finalize(out_dir, wall);
  if (failures > 0) {
    throw NumericalQualityError(std::to_string(failures) +
                                " invariant check(s) failed");
  }
}

int main_impl(const std::vector<std::string>& args) {
  CLI::App app{"Lindblad dynamics of non-interacting spins in a "
               "spatially-correlated bosonic bath"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  double tol = -1.0;
  int threads = 0;

  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--tol", tol, "override zero-mode/kernel tolerances");
  app.add_option("--threads", threads, "worker thread count (0 = default)");

  const std::vector<std::string> subcommands = {
      "spectrum",        "evolve",       "steady",
      "sweep-temperature", "entropy-scan", "validate"};
  for (const auto& name : subcommands) {
    app.add_subcommand(name)->fallthrough();
  }

  // CLI11 wants argv reversed.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (threads > 0) Eigen::setNbThreads(threads);

  try {
    config::RunConfig cfg;
    const std::string sub = app.get_subcommands().front()->get_name();
    if (!config_path.empty()) {
      cfg = config::parse_config(config_path);
      if (!cfg.subcommand.empty() && cfg.subcommand != sub) {
        throw ValidationError("config names subcommand \"" + cfg.subcommand +
                              "\" but \"" + sub + "\" was requested");
      }
    } else if (sub != "validate") {
      throw ValidationError("--config is required for this subcommand");
    }
    cfg.subcommand = sub;

    if (tol >= 0.0) {
      cfg.numeric.tol_abs = tol;
      cfg.numeric.tol_rel = tol;
      cfg.numeric.kernel_tol = tol;
    }

    std::string dir = !out_dir.empty() ? out_dir : cfg.output.directory;
    if (dir.empty()) {
      const char* env = std::getenv("CORRBATH_OUT");
      dir = env && *env ? env : "out";
    }

    run(cfg, dir);
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace corrbath::cli
