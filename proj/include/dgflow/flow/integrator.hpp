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

#pragma once

// Explicit RK4 time stepping of d rho/dt = rhs(rho) with step backtracking, and
// the run driver that writes monitors (CSV) and snapshots.

#include "dgflow/lattice/field.hpp"
#include "dgflow/lattice/ops.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace dgflow::flow {

struct Monitors
{
  double energy = 0.0;
  double excess = 0.0;
  double residual_l2 = 0.0; // flat L^2 norm of rhs
  double u_min = 0.0;
  double l1_norm = 0.0;
  double l1_bound = 0.0;
  double coh_drift_max = 0.0;
};

struct FlowState
{
  lattice::Field2 rho;
  lattice::Field2 rate; // rhs(rho)
  double t = 0.0;
  double dt = 0.0;      // step to attempt next
  double last_dt = 0.0; // step accepted last
  std::size_t steps = 0;
  Monitors monitors;
  lattice::CohomologyClass2 initial_class{};
};

struct StepOptions
{
  double dt_max = 0.0;
  int max_retries = 20;
  double growth = 1.1;
  bool dealias = false;
};

/// Largest step the explicit scheme tolerates near omega1 on this grid.
double stable_dt(const lattice::Grid& grid);

/// Evaluates rhs and monitors. Throws DegenerateForm.
FlowState make_state(lattice::Field2 rho, double dt);

/// One RK4 step. A trial is rejected when the energy excess increases, when
/// any stage is degenerate or non-finite; then dt is halved. Throws
/// StepFailure after max_retries rejections.
FlowState step(const FlowState& state, const StepOptions& options);

struct RunConfig
{
  int n = 8;
  lattice::Scheme scheme = lattice::Scheme::spectral;
  bool dealias = false;
  double sigma_cfl = 0.2;
  std::optional<double> dt_max; // unset: stable_dt(grid)
  double T = 1.0;
  double tol_stationary = 1e-8;
  std::uint64_t seed = 1;
  double epsilon = 0.05;
  int kmax = 2;
  int out_every = 10;
  std::string out_dir = "out";
};

enum class RunStatus
{
  stationary,
  reached_T,
};

struct RunResult
{
  FlowState state;
  RunStatus status;
  double epsilon; // initial amplitude actually used
};

/// CSV header of the monitor file.
inline constexpr const char* monitor_csv_header = "t,dt,energy,residual_l2,u_min,l1_norm,l1_bound,coh_drift_max";

/// Runs the flow from the configured initial data (or `rho0` when given).
/// Writes <out_dir>/monitors.csv and <out_dir>/snapshots/snap_NNNNNN.json.
/// On StepFailure or DegenerateForm writes <out_dir>/failure.json and the
/// last good snapshot, then rethrows. `on_step` sees every accepted state.
RunResult run(const RunConfig& config, std::optional<lattice::Field2> rho0 = std::nullopt,
              const std::function<void(const FlowState&)>& on_step = {});

} // namespace dgflow::flow
