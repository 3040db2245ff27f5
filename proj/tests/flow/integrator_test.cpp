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

#include "dgflow/errors.hpp"
#include "dgflow/flow/functional.hpp"
#include "dgflow/flow/initial.hpp"
#include "dgflow/flow/integrator.hpp"
#include "dgflow/flow/rng.hpp"
#include "dgflow/lattice/snapshot.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

using namespace dgflow::flow;
using dgflow::exterior::omega1;
namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name)
{
  const auto dir = fs::temp_directory_path() / ("dgflow_" + name);
  fs::remove_all(dir);
  return dir;
}

std::vector<std::string> read_lines(const fs::path& p)
{
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    lines.push_back(line);
  return lines;
}

TEST(Rng, KnownValuesAndStreams)
{
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafull);
  CounterRng a(42), b(42);
  for (int i = 0; i < 10; ++i)
    EXPECT_EQ(a.next(), b.next());
  EXPECT_EQ(CounterRng(42).at(5), CounterRng(42).at(5));
  EXPECT_NE(CounterRng(42).split(0).at(0), CounterRng(42).split(1).at(0));
  EXPECT_NE(CounterRng(42).at(0), CounterRng(43).at(0));
  CounterRng u(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform(-1, 1);
    EXPECT_GE(x, -1.0);
    EXPECT_LT(x, 1.0);
  }
}

TEST(InitialData, ClassAmplitudeAndGridIndependence)
{
  const Grid g8(8), g12(12);
  const auto init = perturbed_omega1(g8, 0.05, 2, 3);
  EXPECT_EQ(init.epsilon, 0.05);
  EXPECT_GT(u_min(init.rho), 0.5);
  const auto c = dgflow::lattice::cohomology(init.rho);
  const dgflow::lattice::CohomologyClass2 expected{1, 0, 0, 1, 0, 0};
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_NEAR(c[i], expected[i], 1e-15);
  const auto pert = init.rho - Field2::constant(g8, omega1);
  EXPECT_NEAR(dgflow::lattice::norm_l2(pert), 0.05, 1e-14);
  EXPECT_LT(dgflow::lattice::max_abs(pert - dgflow::lattice::d(init.potential)), 1e-15);

  // same continuous potential on both grids
  const auto l8 = random_potential(g8, 2, 3);
  const auto l12 = random_potential(g12, 2, 3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto a = l8.at(g8.site(2 * i, 2 * j, 0, 2 * i));
      const auto b = l12.at(g12.site(3 * i, 3 * j, 0, 3 * i));
      for (std::size_t k = 0; k < 4; ++k)
        EXPECT_NEAR(a[k], b[k], 1e-12);
    }

  // a huge amplitude is halved until admissible
  const auto big = perturbed_omega1(g8, 50.0, 2, 3);
  EXPECT_LT(big.epsilon, 50.0);
  EXPECT_GT(u_min(big.rho), 0.5);
  EXPECT_EQ(perturbed_omega1(g8, 0.0, 2, 3).epsilon, 0.0);
  EXPECT_THROW(perturbed_omega1(g8, 0.05, 4, 3), dgflow::ConfigError);
}

TEST(Step, StationaryAtOmega1)
{
  const Grid g(8);
  const auto s0 = make_state(Field2::constant(g, omega1), 1e-3);
  StepOptions opt;
  opt.dt_max = 1e-2;
  const auto s1 = step(s0, opt);
  EXPECT_EQ(s1.rho.values(), s0.rho.values());
  EXPECT_EQ(s1.monitors.energy, 2.0);
  EXPECT_EQ(s1.steps, 1u);
  EXPECT_NEAR(s1.dt, 1.1e-3, 1e-18);
}

TEST(Step, EnergyDecreasesEveryAcceptedStep)
{
  const Grid g(8);
  const auto rho0 = Field2::constant(g, omega1) + 0.05 * dgflow::lattice::d(Field1::sample(g, [](const auto& x) {
                      return std::sin(2 * std::numbers::pi * x[0]) * dgflow::exterior::basis_covector(1);
                    }));
  StepOptions opt;
  opt.dt_max = stable_dt(g);
  auto s = make_state(rho0, 0.2 * g.h() * g.h());
  for (int i = 0; i < 30; ++i) {
    auto next = step(s, opt);
    EXPECT_LT(next.monitors.excess, s.monitors.excess);
    EXPECT_LE(next.monitors.energy, s.monitors.energy);
    EXPECT_LT(next.monitors.coh_drift_max, 1e-13);
    s = std::move(next);
  }
}

TEST(Step, HugeStepIsReducedOrRejected)
{
  const Grid g(8);
  auto init = perturbed_omega1(g, 0.05, 2, 5);
  StepOptions opt;
  opt.dt_max = 1.0;
  const auto s0 = make_state(init.rho, 1.0);
  // dt0 = 1 is ~600 times the stable step: RK4 must either halve down to a
  // stable step or give up
  try {
    const auto s1 = step(s0, opt);
    EXPECT_LE(s1.last_dt, 4 * stable_dt(g));
    EXPECT_LE(s1.monitors.excess, s0.monitors.excess);
  } catch (const dgflow::StepFailure&) {
    SUCCEED();
  }
  opt.max_retries = 2;
  EXPECT_THROW(step(s0, opt), dgflow::StepFailure);
}

TEST(Run, Omega1IsImmediatelyStationary)
{
  RunConfig cfg;
  cfg.epsilon = 0.0;
  cfg.out_dir = fresh_dir("run_omega").string();
  const auto r = run(cfg);
  EXPECT_EQ(r.status, RunStatus::stationary);
  EXPECT_EQ(r.state.steps, 0u);
  const auto lines = read_lines(fs::path(cfg.out_dir) / "monitors.csv");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], monitor_csv_header);
  EXPECT_EQ(lines[1].substr(0, 8), "0,0,2,0,");
  EXPECT_TRUE(fs::exists(fs::path(cfg.out_dir) / "snapshots" / "snap_000000.json"));
  EXPECT_FALSE(fs::exists(fs::path(cfg.out_dir) / ".lock"));
  fs::remove_all(cfg.out_dir);
}

TEST(Run, ConvergesToOmega1)
{
  RunConfig cfg;
  cfg.T = 5.0;
  cfg.out_every = 25;
  cfg.out_dir = fresh_dir("run_conv").string();
  std::vector<double> excess;
  const auto r = run(cfg, std::nullopt, [&](const FlowState& s) { excess.push_back(s.monitors.excess); });
  EXPECT_EQ(r.status, RunStatus::stationary);
  for (std::size_t i = 1; i < excess.size(); ++i)
    EXPECT_LT(excess[i], excess[i - 1]);
  const auto w = Field2::constant(r.state.rho.grid(), omega1);
  EXPECT_LT(dgflow::lattice::max_abs(r.state.rho - w), 1e-6);
  EXPECT_NEAR(r.state.monitors.energy, 2.0, 1e-8);

  // CSV rows: step 0, every 25 steps, the final step
  const auto lines = read_lines(fs::path(cfg.out_dir) / "monitors.csv");
  const std::size_t expected_rows = 1 + r.state.steps / 25 + (r.state.steps % 25 ? 1 : 0);
  EXPECT_EQ(lines.size(), expected_rows + 1);
  double prev = 1e300;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::stringstream ss(lines[i]);
    std::vector<double> v;
    for (std::string cell; std::getline(ss, cell, ',');)
      v.push_back(std::stod(cell));
    ASSERT_EQ(v.size(), 8u);
    EXPECT_LE(v[2], prev);
    prev = v[2];
    EXPECT_LE(v[5], v[6] + 1e-10);
    EXPECT_LT(v[7], 1e-12);
  }
  const auto final_snap = dgflow::lattice::read_snapshot(fs::path(cfg.out_dir) / "snapshots" /
                                                          ("snap_" + std::string(6 - std::to_string(r.state.steps).size(), '0') +
                                                           std::to_string(r.state.steps) + ".json"));
  EXPECT_EQ(final_snap.rho.values(), r.state.rho.values());
  fs::remove_all(cfg.out_dir);
}

TEST(Run, DeterministicAndLocked)
{
  RunConfig cfg;
  cfg.T = 0.02;
  cfg.out_dir = fresh_dir("run_det_a").string();
  run(cfg);
  const auto a = read_lines(fs::path(cfg.out_dir) / "monitors.csv");
  RunConfig cfg2 = cfg;
  cfg2.out_dir = fresh_dir("run_det_b").string();
  run(cfg2);
  EXPECT_EQ(a, read_lines(fs::path(cfg2.out_dir) / "monitors.csv"));

  std::ofstream(fs::path(cfg.out_dir) / ".lock") << "1\n";
  EXPECT_THROW(run(cfg), dgflow::ConfigError);
  fs::remove_all(cfg.out_dir);
  fs::remove_all(cfg2.out_dir);
}

TEST(Run, DegeneracyIsReportedNotPropagatedAsNaN)
{
  RunConfig cfg;
  cfg.epsilon = 0.3;
  cfg.sigma_cfl = 1e8;
  cfg.dt_max = 1e8;
  cfg.T = 1e9;
  cfg.out_dir = fresh_dir("run_degen").string();
  // twenty halvings of dt = 1e8 never reach a stable step
  EXPECT_THROW(run(cfg), dgflow::StepFailure);
  const auto failure = nlohmann::json::parse(std::ifstream(fs::path(cfg.out_dir) / "failure.json"));
  EXPECT_EQ(failure.at("error"), "StepFailure");
  EXPECT_EQ(failure.at("steps"), 0);
  EXPECT_TRUE(std::isfinite(failure.at("monitors").at("energy").get<double>()));
  EXPECT_NE(failure.at("message").get<std::string>().find("failed after 20"), std::string::npos);
  for (const auto& line : read_lines(fs::path(cfg.out_dir) / "monitors.csv"))
    EXPECT_EQ(line.find("nan"), std::string::npos);
  const auto snap = dgflow::lattice::read_snapshot(fs::path(cfg.out_dir) / "snapshots" / "snap_000000.json");
  EXPECT_TRUE(dgflow::lattice::all_finite(snap.rho));
  fs::remove_all(cfg.out_dir);

  // a degenerate initial field fails before any step
  const Grid g(8);
  cfg.out_dir = fresh_dir("run_degen0").string();
  EXPECT_THROW(run(cfg, Field2::constant(g, dgflow::exterior::Form2{{1, 0, 0, 0, 0, 0}})), dgflow::DegenerateForm);
  const auto f0 = nlohmann::json::parse(std::ifstream(fs::path(cfg.out_dir) / "failure.json"));
  EXPECT_EQ(f0.at("error"), "DegenerateForm");
  fs::remove_all(cfg.out_dir);
}

} // namespace
