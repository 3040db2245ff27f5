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

#include "dgflow/lattice/grid.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dgflow::checks {

/// One identity, aggregated over all of its samples. lhs/rhs are taken from
/// the sample with the largest relative error.
struct CheckEntry
{
  std::string name;
  std::string formula;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  std::size_t samples = 0;
  std::optional<int> grid_n; // empty for pointwise identities
  std::optional<lattice::Scheme> scheme;

  bool pass() const { return samples > 0 && rel_err <= tol; }
};

struct SuiteReport
{
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckEntry> entries;

  bool passed() const;
  const CheckEntry& entry(const std::string& name) const;
};

/// Collects samples for named identities. The relative error of a sample is
/// abs_err / scale, with scale supplied by the caller.
class Recorder
{
public:
  Recorder(std::string suite, std::uint64_t seed) : report_{std::move(suite), seed, {}} {}

  CheckEntry& declare(const std::string& name, const std::string& formula, double tol,
                      std::optional<int> grid_n = std::nullopt,
                      std::optional<lattice::Scheme> scheme = std::nullopt);

  void record(const std::string& name, double lhs, double rhs, double abs_err, double scale);
  void record(const std::string& name, double lhs, double rhs, double scale)
  {
    record(name, lhs, rhs, std::fabs(lhs - rhs), scale);
  }

  SuiteReport take() { return std::move(report_); }

private:
  CheckEntry& find(const std::string& name);
  SuiteReport report_;
};

nlohmann::json to_json(const CheckEntry& e);
nlohmann::json to_json(const SuiteReport& r);

} // namespace dgflow::checks
