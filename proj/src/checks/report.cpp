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

#include "dgflow/checks/report.hpp"

#include "dgflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dgflow::checks {

bool SuiteReport::passed() const
{
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass(); });
}

const CheckEntry& SuiteReport::entry(const std::string& name) const
{
  for (const auto& e : entries)
    if (e.name == name)
      return e;
  throw Error("no check named " + name + " in suite " + suite);
}

CheckEntry& Recorder::declare(const std::string& name, const std::string& formula, double tol,
                              std::optional<int> grid_n, std::optional<lattice::Scheme> scheme)
{
  CheckEntry e;
  e.name = name;
  e.formula = formula;
  e.tol = tol;
  e.grid_n = grid_n;
  e.scheme = scheme;
  report_.entries.push_back(std::move(e));
  return report_.entries.back();
}

CheckEntry& Recorder::find(const std::string& name)
{
  for (auto& e : report_.entries)
    if (e.name == name)
      return e;
  throw Error("check " + name + " was not declared");
}

void Recorder::record(const std::string& name, double lhs, double rhs, double abs_err, double scale)
{
  CheckEntry& e = find(name);
  double rel = abs_err / scale;
  // a NaN must fail the check, not vanish in max()
  if (!std::isfinite(rel))
    rel = std::numeric_limits<double>::infinity();
  if (e.samples == 0 || rel > e.rel_err) {
    e.lhs = lhs;
    e.rhs = rhs;
    e.rel_err = rel;
  }
  e.abs_err = std::isnan(abs_err) ? std::numeric_limits<double>::infinity() : std::max(e.abs_err, abs_err);
  ++e.samples;
}

nlohmann::json to_json(const CheckEntry& e)
{
  nlohmann::json j = {{"name", e.name},       {"formula", e.formula}, {"lhs", e.lhs},
                      {"rhs", e.rhs},         {"abs_err", e.abs_err}, {"rel_err", e.rel_err},
                      {"tol", e.tol},         {"samples", e.samples}, {"pass", e.pass()}};
  j["grid_n"] = e.grid_n ? nlohmann::json(*e.grid_n) : nlohmann::json(nullptr);
  j["scheme"] = e.scheme ? nlohmann::json(lattice::to_string(*e.scheme)) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SuiteReport& r)
{
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& e : r.entries)
    checks.push_back(to_json(e));
  return {{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
}

} // namespace dgflow::checks
