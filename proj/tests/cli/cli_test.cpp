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

#include "dgflow/errors.hpp"
#include "dgflow/exterior/rho.hpp"
#include "dgflow/lattice/snapshot.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dgflow::cli;

struct Outcome
{
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
  args.insert(args.begin(), "dgflow");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
  const fs::path p = fs::temp_directory_path() / ("dgflow_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write_config(const fs::path& dir, const json& j)
{
  const fs::path p = dir / "config.json";
  std::ofstream(p) << j.dump();
  return p;
}

std::vector<std::vector<double>> read_csv(const fs::path& p)
{
  std::ifstream f(p);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, dgflow::flow::monitor_csv_header);
  std::vector<std::vector<double>> rows;
  while (std::getline(f, line)) {
    std::stringstream ss(line);
    std::vector<double> row;
    for (std::string cell; std::getline(ss, cell, ',');)
      row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

TEST(Config, TemplateRoundTrips)
{
  const auto r = invoke({"init"});
  ASSERT_EQ(r.code, exit_ok);
  const json t = json::parse(r.out);
  EXPECT_EQ(t.size(), 15u);
  EXPECT_EQ(t, template_config());
  const Config c = parse_config(t);
  EXPECT_EQ(c.run.n, 8);
  EXPECT_FALSE(c.run.dt_max.has_value());
  EXPECT_EQ(c.check_suite.size(), 5u);

  const fs::path dir = scratch("init");
  ASSERT_EQ(invoke({"init", "--out", dir.string()}).code, exit_ok);
  EXPECT_EQ(load_config(dir / "config.json").run.kmax, 2);
  fs::remove_all(dir);
}

TEST(Config, RejectsBadKeysByName)
{
  auto message = [](const json& j) -> std::string {
    try {
      parse_config(j);
    } catch (const dgflow::ConfigError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message({{"bogus", 1}}).find("\"bogus\""), std::string::npos);
  EXPECT_NE(message({{"n", "eight"}}).find("\"n\""), std::string::npos);
  EXPECT_NE(message({{"n", 7}}).find("\"n\""), std::string::npos);
  EXPECT_NE(message({{"scheme", "fd4"}}).find("\"scheme\""), std::string::npos);
  EXPECT_NE(message({{"dt_max", -1.0}}).find("\"dt_max\""), std::string::npos);
  EXPECT_NE(message({{"seed", -3}}).find("\"seed\""), std::string::npos);
  EXPECT_NE(message({{"epsilon", -0.1}}).find("\"epsilon\""), std::string::npos);
  EXPECT_NE(message({{"kmax", 4}}).find("\"kmax\""), std::string::npos);
  EXPECT_NE(message({{"check_suite", {"theta", "nope"}}}).find("nope"), std::string::npos);
  EXPECT_NE(message(json::array()).find("object"), std::string::npos);

  const Config c = parse_config({{"check_suite", "theta"}, {"dt_max", 0.01}, {"scheme", "fd2"}});
  EXPECT_EQ(c.check_suite, std::vector<std::string>{"theta"});
  EXPECT_EQ(*c.run.dt_max, 0.01);
  EXPECT_EQ(c.run.scheme, dgflow::lattice::Scheme::fd2);
}

TEST(Cli, ConfigErrorsExitOne)
{
  const fs::path dir = scratch("bad");
  std::ofstream(dir / "broken.json") << "{\"n\": 8,";
  auto r = invoke({"run", "--config", (dir / "broken.json").string()});
  EXPECT_EQ(r.code, exit_config);
  EXPECT_NE(r.err.find("not valid JSON"), std::string::npos);

  r = invoke({"run", "--config", write_config(dir, {{"n", "eight"}}).string()});
  EXPECT_EQ(r.code, exit_config);
  EXPECT_NE(r.err.find("\"n\""), std::string::npos);

  EXPECT_EQ(invoke({"run", "--config", (dir / "missing.json").string()}).code, exit_config);
  EXPECT_EQ(invoke({"frobnicate"}).code, exit_config);
  EXPECT_EQ(invoke({}).code, exit_config);
  EXPECT_EQ(invoke({"run", "--threads", "0"}).code, exit_config);
  EXPECT_EQ(invoke({"--help"}).code, exit_ok);
  fs::remove_all(dir);
}

TEST(Cli, RunAtOmega1IsImmediatelyStationary)
{
  const fs::path dir = scratch("omega1");
  const auto cfg = write_config(dir, {{"epsilon", 0.0}, {"T", 1.0}});
  const auto r = invoke({"run", "--config", cfg.string(), "--out", (dir / "out").string()});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  EXPECT_EQ(json::parse(r.out).at("status"), "stationary");
  const auto rows = read_csv(dir / "out" / "monitors.csv");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0][2], 2.0);
  fs::remove_all(dir);
}

TEST(Cli, RunConverges)
{
  const fs::path dir = scratch("conv");
  const auto cfg = write_config(dir, {{"epsilon", 0.05}, {"n", 8}, {"scheme", "spectral"}, {"T", 5.0},
                                      {"out_every", 1}, {"out_dir", (dir / "out").string()}});
  const auto r = invoke({"run", "--config", cfg.string(), "--threads", "1"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  const json summary = json::parse(r.out);
  EXPECT_EQ(summary.at("status"), "stationary");
  EXPECT_LT(summary.at("monitors").at("residual_l2").get<double>(), 1e-8);
  const auto rows = read_csv(dir / "out" / "monitors.csv");
  ASSERT_GT(rows.size(), 10u);
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_LE(rows[i][2], rows[i - 1][2]);
  EXPECT_LT(rows.back()[3], 1e-8);

  // identical config and seed give an identical CSV
  const auto first = read_csv(dir / "out" / "monitors.csv");
  ASSERT_EQ(invoke({"run", "--config", cfg.string(), "--threads", "1"}).code, exit_ok);
  EXPECT_EQ(read_csv(dir / "out" / "monitors.csv"), first);

  // a held lock refuses a second writer
  std::ofstream(dir / "out" / ".lock") << "1\n";
  EXPECT_EQ(invoke({"run", "--config", cfg.string()}).code, exit_config);
  fs::remove_all(dir);
}

TEST(Cli, StepFailureExitsTwoWithDiagnostics)
{
  const fs::path dir = scratch("fail");
  const auto cfg = write_config(dir, {{"epsilon", 0.3}, {"sigma_cfl", 1e8}, {"dt_max", 1e8}, {"T", 1e9}});
  const auto r = invoke({"run", "--config", cfg.string(), "--out", (dir / "out").string()});
  EXPECT_EQ(r.code, exit_failure);
  EXPECT_NE(r.err.find("failure.json"), std::string::npos);
  const json f = json::parse(std::ifstream(dir / "out" / "failure.json"));
  EXPECT_EQ(f.at("error"), "StepFailure");
  fs::remove_all(dir);
}

TEST(Cli, CheckReportsAreDeterministic)
{
  const fs::path dir = scratch("check");
  const auto cfg = write_config(dir, {{"check_suite", {"theta"}}, {"samples", 200}, {"seed", 4},
                                      {"report_path", (dir / "report.json").string()}});
  ASSERT_EQ(invoke({"check", "--config", cfg.string()}).code, exit_ok);
  std::stringstream a;
  a << std::ifstream(dir / "report.json").rdbuf();
  ASSERT_EQ(invoke({"check", "--config", cfg.string()}).code, exit_ok);
  std::stringstream b;
  b << std::ifstream(dir / "report.json").rdbuf();
  EXPECT_EQ(a.str(), b.str());
  const json j = json::parse(a.str());
  EXPECT_EQ(j.at("passed"), true);
  EXPECT_EQ(j.at("suites")[0].at("suite"), "theta");
  EXPECT_EQ(j.at("suites")[0].at("seed"), 4);

  const auto r = invoke({"check", "--config", cfg.string(), "--seed", "5"});
  EXPECT_EQ(r.code, exit_ok);
  std::stringstream c;
  c << std::ifstream(dir / "report.json").rdbuf();
  EXPECT_NE(c.str(), a.str());
  EXPECT_NE(r.err.find("PASS theta/theta_wedge_rho"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, HessianQuotientsAtOmega1)
{
  const fs::path dir = scratch("hessian");
  const dgflow::lattice::Grid g(8);
  dgflow::lattice::write_snapshot(dir / "w.json", dgflow::lattice::Field2::constant(g, dgflow::exterior::omega1), 0.0);
  const auto r = invoke({"hessian", (dir / "w.json").string(), "--seed", "9"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.at("samples").size(), 8u);
  for (const auto& s : j.at("samples"))
    EXPECT_NEAR(s.at("quotient").get<double>(), 1.0, 1e-10);
  EXPECT_NEAR(j.at("min_quotient").get<double>(), 1.0, 1e-10);
  EXPECT_EQ(j.at("seed"), 9);

  // degenerate snapshot: precondition gate
  dgflow::exterior::Form2 e01;
  e01[0] = 1.0;
  dgflow::lattice::write_snapshot(dir / "d.json", dgflow::lattice::Field2::constant(g, e01), 0.0);
  const auto d = invoke({"hessian", (dir / "d.json").string()});
  EXPECT_EQ(d.code, exit_failure);
  EXPECT_EQ(json::parse(d.out).at("error"), "DegenerateForm");

  EXPECT_EQ(invoke({"hessian", (dir / "none.json").string()}).code, exit_config);
  EXPECT_EQ(invoke({"hessian"}).code, exit_config);
  fs::remove_all(dir);
}

} // namespace
