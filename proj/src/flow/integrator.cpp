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

#include "dgflow/flow/integrator.hpp"

#include "dgflow/errors.hpp"
#include "dgflow/flow/functional.hpp"
#include "dgflow/flow/initial.hpp"
#include "dgflow/lattice/snapshot.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dgflow::flow {

namespace fs = std::filesystem;

double stable_dt(const lattice::Grid& grid) { return 2.5 / (4.0 * grid.max_symbol_sq()); }

namespace {

Monitors compute_monitors(const lattice::Field2& rho, const lattice::Field2& rate,
                          const lattice::CohomologyClass2& initial)
{
  Monitors m;
  const EnergyReport e = l1_report(rho);
  m.energy = e.energy;
  m.excess = e.excess;
  m.l1_norm = e.l1_norm;
  m.l1_bound = e.l1_bound;
  m.residual_l2 = lattice::norm_l2(rate);
  m.u_min = u_min(rho);
  const auto c = lattice::cohomology(rho);
  for (std::size_t i = 0; i < c.size(); ++i)
    m.coh_drift_max = std::max(m.coh_drift_max, std::fabs(c[i] - initial[i]));
  return m;
}

FlowState make_state(lattice::Field2 rho, double dt, const lattice::CohomologyClass2& initial)
{
  require_admissible(rho);
  lattice::Field2 rate = rhs(rho);
  FlowState s{std::move(rho), std::move(rate), 0.0, dt, 0.0, 0, Monitors{}, initial};
  s.monitors = compute_monitors(s.rho, s.rate, initial);
  return s;
}

nlohmann::json monitors_json(const Monitors& m)
{
  return {{"energy", m.energy},   {"excess", m.excess},   {"residual_l2", m.residual_l2},
          {"u_min", m.u_min},     {"l1_norm", m.l1_norm}, {"l1_bound", m.l1_bound},
          {"coh_drift_max", m.coh_drift_max}};
}

// Exclusive marker file for an output directory.
class DirLock
{
public:
  explicit DirLock(const fs::path& dir) : path_(dir / ".lock")
  {
    const int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0)
      throw ConfigError("output directory " + dir.string() + " is locked by another run (remove " +
                        path_.string() + " if stale)");
    const std::string pid = std::to_string(::getpid()) + "\n";
    [[maybe_unused]] auto n = ::write(fd, pid.data(), pid.size());
    ::close(fd);
  }
  ~DirLock()
  {
    std::error_code ec;
    fs::remove(path_, ec);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

private:
  fs::path path_;
};

std::string snapshot_name(std::size_t step)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%06zu.json", step);
  return buf;
}

} // namespace

FlowState make_state(lattice::Field2 rho, double dt)
{
  const auto initial = lattice::cohomology(rho);
  return make_state(std::move(rho), dt, initial);
}

FlowState step(const FlowState& state, const StepOptions& options)
{
  double dt = state.dt;
  std::string reason;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt, dt *= 0.5) {
    try {
      const auto& rho = state.rho;
      const auto& k1 = state.rate;
      const lattice::Field2 k2 = rhs(rho + (0.5 * dt) * k1);
      const lattice::Field2 k3 = rhs(rho + (0.5 * dt) * k2);
      const lattice::Field2 k4 = rhs(rho + dt * k3);
      lattice::Field2 next = rho;
      next.axpy(dt / 6.0, k1).axpy(dt / 3.0, k2).axpy(dt / 3.0, k3).axpy(dt / 6.0, k4);
      if (options.dealias)
        next = lattice::dealias(next);
      FlowState out = make_state(std::move(next), dt, state.initial_class);
      if (out.monitors.excess > state.monitors.excess) {
        std::ostringstream msg;
        msg << "energy excess increased from " << state.monitors.excess << " to " << out.monitors.excess;
        reason = msg.str();
        continue;
      }
      out.t = state.t + dt;
      out.last_dt = dt;
      out.steps = state.steps + 1;
      out.dt = options.dt_max > 0.0 ? std::min(dt * options.growth, options.dt_max) : dt * options.growth;
      return out;
    } catch (const DegenerateForm& e) {
      reason = e.what();
    }
  }
  std::ostringstream msg;
  msg << "step at t = " << state.t << " failed after " << options.max_retries
      << " step halvings (last dt = " << 2.0 * dt << "): " << reason;
  throw StepFailure(msg.str());
}

RunResult run(const RunConfig& config, std::optional<lattice::Field2> rho0,
              const std::function<void(const FlowState&)>& on_step)
{
  const lattice::Grid grid(config.n, config.scheme);
  if (!(config.T >= 0.0) || !(config.tol_stationary > 0.0) || config.out_every < 1 || !(config.sigma_cfl > 0.0))
    throw ConfigError("T >= 0, tol_stationary > 0, sigma_cfl > 0 and out_every >= 1 are required");
  if (config.dt_max && !(*config.dt_max > 0.0))
    throw ConfigError("dt_max must be positive");

  RunStatus status = RunStatus::reached_T;
  double epsilon = 0.0;
  lattice::Field2 start(grid);
  if (rho0) {
    if (!(rho0->grid() == grid))
      throw ConfigError("initial field grid does not match the configuration");
    start = std::move(*rho0);
  } else {
    InitialData init = perturbed_omega1(grid, config.epsilon, config.kmax, config.seed);
    start = std::move(init.rho);
    epsilon = init.epsilon;
  }

  const fs::path out_dir(config.out_dir);
  const fs::path snap_dir = out_dir / "snapshots";
  fs::create_directories(snap_dir);
  DirLock lock(out_dir);

  std::ofstream csv(out_dir / "monitors.csv", std::ios::trunc);
  if (!csv)
    throw Error("cannot write " + (out_dir / "monitors.csv").string());
  csv << monitor_csv_header << '\n';
  csv.precision(17);

  auto write_row = [&](const FlowState& s) {
    const Monitors& m = s.monitors;
    csv << s.t << ',' << s.last_dt << ',' << m.energy << ',' << m.residual_l2 << ',' << m.u_min << ','
        << m.l1_norm << ',' << m.l1_bound << ',' << m.coh_drift_max << '\n';
  };
  auto write_snap = [&](const FlowState& s) {
    nlohmann::json mon = monitors_json(s.monitors);
    mon["step"] = s.steps;
    lattice::write_snapshot(snap_dir / snapshot_name(s.steps), s.rho, s.t, mon);
  };

  const double dt_max = config.dt_max ? *config.dt_max : stable_dt(grid);
  StepOptions options;
  options.dt_max = dt_max;
  options.dealias = config.dealias;
  const double dt0 = std::min(config.sigma_cfl * grid.h() * grid.h(), dt_max);

  std::optional<FlowState> state;
  auto fail = [&](const Error& e) {
    csv.flush();
    nlohmann::json report = {{"error", dynamic_cast<const StepFailure*>(&e) ? "StepFailure" : "DegenerateForm"},
                             {"message", e.what()}};
    if (state) {
      report["t"] = state->t;
      report["steps"] = state->steps;
      report["dt"] = state->dt;
      report["monitors"] = monitors_json(state->monitors);
      write_snap(*state);
      report["snapshot"] = (snap_dir / snapshot_name(state->steps)).string();
    } else {
      report["u_min"] = u_min(start);
    }
    std::ofstream(out_dir / "failure.json", std::ios::trunc) << report.dump(2) << '\n';
  };

  try {
    state = make_state(start, dt0);
    write_row(*state);
    write_snap(*state);
    if (on_step)
      on_step(*state);
    for (;;) {
      if (state->monitors.residual_l2 < config.tol_stationary) {
        status = RunStatus::stationary;
        break;
      }
      if (state->t >= config.T * (1.0 - 1e-12)) {
        status = RunStatus::reached_T;
        break;
      }
      FlowState trial = *state;
      trial.dt = std::min(trial.dt, config.T - trial.t);
      state = step(trial, options);
      if (on_step)
        on_step(*state);
      if (state->steps % static_cast<std::size_t>(config.out_every) == 0) {
        write_row(*state);
        write_snap(*state);
      }
    }
  } catch (const StepFailure& e) {
    fail(e);
    throw;
  } catch (const DegenerateForm& e) {
    fail(e);
    throw;
  }
  if (state->steps % static_cast<std::size_t>(config.out_every) != 0) {
    write_row(*state);
    write_snap(*state);
  }
  csv.flush();
  return RunResult{std::move(*state), status, epsilon};
}

} // namespace dgflow::flow
