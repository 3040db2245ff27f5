/* Copyright 2026 The dgflow Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "commands.hpp"

#include "dgflow/checks/suites.hpp"
#include "dgflow/errors.hpp"
#include "dgflow/exterior/rho.hpp"
#include "dgflow/flow/functional.hpp"
#include "dgflow/flow/initial.hpp"
#include "dgflow/flow/rng.hpp"
#include "dgflow/lattice/ops.hpp"
#include "dgflow/lattice/snapshot.hpp"

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

namespace dgflow::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void bad_key(const std::string& key, const std::string& what, const json& value)
{
  throw ConfigError("config key \"" + key + "\": " + what + ", got " + value.dump());
}

int get_int(const std::string& key, const json& v)
{
  if (!v.is_number_integer() || v.get<std::int64_t>() < std::numeric_limits<int>::min() ||
      v.get<std::int64_t>() > std::numeric_limits<int>::max())
    bad_key(key, "expected an integer", v);
  return v.get<int>();
}

double get_number(const std::string& key, const json& v)
{
  if (!v.is_number() || !std::isfinite(v.get<double>()))
    bad_key(key, "expected a finite number", v);
  return v.get<double>();
}

std::uint64_t get_unsigned(const std::string& key, const json& v)
{
  if (!v.is_number_unsigned())
    bad_key(key, "expected a non-negative integer", v);
  return v.get<std::uint64_t>();
}

std::string get_string(const std::string& key, const json& v)
{
  if (!v.is_string())
    bad_key(key, "expected a string", v);
  return v.get<std::string>();
}

json monitors_json(const flow::Monitors& m)
{
  return {{"energy", m.energy},   {"excess", m.excess},   {"residual_l2", m.residual_l2},
          {"u_min", m.u_min},     {"l1_norm", m.l1_norm}, {"l1_bound", m.l1_bound},
          {"coh_drift_max", m.coh_drift_max}};
}

// Writes the report to report_path, or to `out` when none is configured.
void emit(const json& report, const Config& config, std::ostream& out)
{
  if (config.report_path.empty()) {
    out << report.dump(2) << '\n';
    return;
  }
  const fs::path path(config.report_path);
  if (path.has_parent_path())
    fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::trunc);
  if (!f)
    throw ConfigError("cannot write report to " + path.string());
  f << report.dump(2) << '\n';
}

} // namespace

Config parse_config(const json& j)
{
  if (!j.is_object())
    throw ConfigError("config must be a JSON object");
  Config c;
  auto& r = c.run;
  for (const auto& [key, v] : j.items()) {
    if (key == "n") {
      r.n = get_int(key, v);
      if (r.n < 4 || r.n % 2 != 0)
        bad_key(key, "expected an even integer >= 4", v);
    } else if (key == "scheme") {
      const std::string s = get_string(key, v);
      try {
        r.scheme = lattice::scheme_from_string(s);
      } catch (const ConfigError&) {
        bad_key(key, "expected \"spectral\" or \"fd2\"", v);
      }
    } else if (key == "dealias") {
      if (!v.is_boolean())
        bad_key(key, "expected true or false", v);
      r.dealias = v.get<bool>();
    } else if (key == "sigma_cfl") {
      r.sigma_cfl = get_number(key, v);
      if (!(r.sigma_cfl > 0.0))
        bad_key(key, "expected a positive number", v);
    } else if (key == "dt_max") {
      if (v.is_null()) {
        r.dt_max.reset();
      } else {
        r.dt_max = get_number(key, v);
        if (!(*r.dt_max > 0.0))
          bad_key(key, "expected a positive number or null", v);
      }
    } else if (key == "T") {
      r.T = get_number(key, v);
      if (r.T < 0.0)
        bad_key(key, "expected a non-negative number", v);
    } else if (key == "tol_stationary") {
      r.tol_stationary = get_number(key, v);
      if (!(r.tol_stationary > 0.0))
        bad_key(key, "expected a positive number", v);
    } else if (key == "seed") {
      r.seed = get_unsigned(key, v);
    } else if (key == "epsilon") {
      r.epsilon = get_number(key, v);
      if (r.epsilon < 0.0)
        bad_key(key, "expected a non-negative number", v);
    } else if (key == "kmax") {
      r.kmax = get_int(key, v);
      if (r.kmax < 1)
        bad_key(key, "expected an integer >= 1", v);
    } else if (key == "out_every") {
      r.out_every = get_int(key, v);
      if (r.out_every < 1)
        bad_key(key, "expected an integer >= 1", v);
    } else if (key == "out_dir") {
      r.out_dir = get_string(key, v);
      if (r.out_dir.empty())
        bad_key(key, "expected a non-empty path", v);
    } else if (key == "check_suite") {
      std::vector<std::string> names;
      if (v.is_string()) {
        names.push_back(v.get<std::string>());
      } else if (v.is_array()) {
        for (const auto& e : v)
          names.push_back(get_string(key, e));
      } else {
        bad_key(key, "expected a suite name or a list of names", v);
      }
      const auto& known = checks::suite_names();
      for (const auto& name : names)
        if (std::find(known.begin(), known.end(), name) == known.end())
          bad_key(key, "unknown suite \"" + name + "\"", v);
      c.check_suite = std::move(names);
    } else if (key == "samples") {
      c.samples = static_cast<std::size_t>(get_unsigned(key, v));
    } else if (key == "report_path") {
      c.report_path = v.is_null() ? std::string() : get_string(key, v);
    } else {
      throw ConfigError("unknown config key \"" + key + "\"");
    }
  }
  if (2 * r.kmax >= r.n)
    throw ConfigError("config key \"kmax\": must be below n/2 = " + std::to_string(r.n / 2) + ", got " +
                      std::to_string(r.kmax));
  return c;
}

Config load_config(const fs::path& path)
{
  std::ifstream f(path);
  if (!f)
    throw ConfigError("cannot read config file " + path.string());
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

json template_config()
{
  const Config c;
  const auto& r = c.run;
  return {{"n", r.n},
          {"scheme", std::string(lattice::to_string(r.scheme))},
          {"dealias", r.dealias},
          {"sigma_cfl", r.sigma_cfl},
          {"dt_max", nullptr},
          {"T", r.T},
          {"tol_stationary", r.tol_stationary},
          {"seed", r.seed},
          {"epsilon", r.epsilon},
          {"kmax", r.kmax},
          {"out_every", r.out_every},
          {"out_dir", r.out_dir},
          {"check_suite", checks::suite_names()},
          {"samples", c.samples},
          {"report_path", nullptr}};
}

int cmd_run(const Config& config, std::ostream& out, std::ostream& err)
{
  try {
    const auto result = flow::run(config.run);
    const auto& s = result.state;
    const json summary = {
      {"status", result.status == flow::RunStatus::stationary ? "stationary" : "reached_T"},
      {"t", s.t},
      {"steps", s.steps},
      {"epsilon", result.epsilon},
      {"monitors", monitors_json(s.monitors)},
      {"out_dir", config.run.out_dir},
    };
    emit(summary, config, out);
    return exit_ok;
  } catch (const StepFailure& e) {
    err << "step failure: " << e.what() << "\ndiagnostics in " << (fs::path(config.run.out_dir) / "failure.json").string()
        << '\n';
    return exit_failure;
  } catch (const DegenerateForm& e) {
    err << "degenerate form: " << e.what() << "\ndiagnostics in "
        << (fs::path(config.run.out_dir) / "failure.json").string() << '\n';
    return exit_failure;
  }
}

int cmd_check(const Config& config, std::ostream& out, std::ostream& err)
{
  const auto names = config.check_suite.empty() ? checks::suite_names() : config.check_suite;
  checks::CheckOptions opts;
  opts.seed = config.run.seed;
  opts.samples = config.samples;
  opts.n = config.run.n;
  opts.scheme = config.run.scheme;

  json suites = json::array();
  bool passed = true;
  for (const auto& name : names) {
    const auto report = checks::run_suite(name, opts);
    passed = passed && report.passed();
    for (const auto& e : report.entries)
      err << (e.pass() ? "PASS " : "FAIL ") << name << '/' << e.name << " rel_err " << e.rel_err << " tol " << e.tol
          << '\n';
    suites.push_back(checks::to_json(report));
  }
  const json report = {{"seed", opts.seed},
                       {"n", opts.n},
                       {"scheme", std::string(lattice::to_string(opts.scheme))},
                       {"samples", opts.samples},
                       {"passed", passed},
                       {"suites", suites}};
  emit(report, config, out);
  return passed ? exit_ok : exit_checks;
}

int cmd_hessian(const Config& config, const fs::path& snapshot, std::ostream& out, std::ostream& err)
{
  const lattice::Snapshot snap = lattice::read_snapshot(snapshot);
  const lattice::Field2& rho = snap.rho;
  const lattice::Grid& grid = rho.grid();
  const double umin = flow::u_min(rho);
  json report = {{"snapshot", snapshot.string()},
                 {"n", grid.n()},
                 {"scheme", std::string(lattice::to_string(grid.scheme()))},
                 {"u_min", umin}};
  if (!(umin > exterior::u_floor)) {
    report["error"] = "DegenerateForm";
    report["u_floor"] = exterior::u_floor;
    emit(report, config, out);
    err << "snapshot is degenerate: u_min = " << umin << " <= u_floor = " << exterior::u_floor << '\n';
    return exit_failure;
  }
  const int kmax = std::min(config.run.kmax, grid.n() / 2 - 1);
  const std::size_t k = config.samples == 0 ? 8 : config.samples;
  const flow::CounterRng seeds(config.run.seed, 0x4865);
  json samples = json::array();
  double qmin = std::numeric_limits<double>::infinity();
  double qmax = -qmin;
  try {
    for (std::size_t i = 0; i < k; ++i) {
      lattice::Field2 dir = lattice::d(flow::random_potential(grid, kmax, seeds.at(i)));
      dir *= 1.0 / lattice::norm_l2(dir);
      const double l2 = lattice::norm_l2(dir);
      const double h = flow::hessian_form(rho, dir);
      const double q = h / (l2 * l2);
      qmin = std::min(qmin, q);
      qmax = std::max(qmax, q);
      samples.push_back({{"index", i}, {"hessian", h}, {"l2_sq", l2 * l2}, {"quotient", q}});
    }
  } catch (const DegenerateForm& e) {
    report["error"] = "DegenerateForm";
    report["message"] = e.what();
    emit(report, config, out);
    err << "degenerate form: " << e.what() << '\n';
    return exit_failure;
  }
  report["kmax"] = kmax;
  report["seed"] = config.run.seed;
  report["samples"] = samples;
  report["min_quotient"] = qmin;
  report["max_quotient"] = qmax;
  emit(report, config, out);
  return exit_ok;
}

int cmd_init(const std::optional<fs::path>& out_dir, std::ostream& out, std::ostream& err)
{
  const std::string text = template_config().dump(2) + "\n";
  if (!out_dir) {
    out << text;
    return exit_ok;
  }
  fs::create_directories(*out_dir);
  const fs::path path = *out_dir / "config.json";
  std::ofstream f(path, std::ios::trunc);
  if (!f) {
    err << "cannot write " << path.string() << '\n';
    return exit_config;
  }
  f << text;
  err << "wrote " << path.string() << '\n';
  return exit_ok;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Donaldson geometric flow on the flat four-torus"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory (overrides out_dir)");
  app.add_option("--seed", seed, "seed override");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* run = app.add_subcommand("run", "integrate the flow, writing monitors.csv and snapshots");
  auto* check = app.add_subcommand("check", "run identity suites and emit a JSON report");
  auto* hessian = app.add_subcommand("hessian", "probe the Hessian of a snapshot along random exact directions");
  std::string snapshot;
  hessian->add_option("snapshot", snapshot, "snapshot header (.json)")->required();
  auto* init = app.add_subcommand("init", "emit a template config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }

  try {
    if (init->parsed())
      return cmd_init(out_dir.empty() ? std::nullopt : std::optional<fs::path>(out_dir), out, err);

    Config config = config_path.empty() ? parse_config(template_config()) : load_config(config_path);
    if (!out_dir.empty())
      config.run.out_dir = out_dir;
    if (seed)
      config.run.seed = *seed;
#ifdef _OPENMP
    if (threads > 0)
      omp_set_num_threads(threads);
#endif

    if (run->parsed())
      return cmd_run(config, out, err);
    if (check->parsed())
      return cmd_check(config, out, err);
    return cmd_hessian(config, snapshot, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  }
}

} // namespace dgflow::cli
