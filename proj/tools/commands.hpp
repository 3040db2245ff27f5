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

// Command-line driver. Every subcommand is a function returning the process
// exit code, so tests can call them without spawning a process.

#include "dgflow/flow/integrator.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dgflow::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 1;   // bad config, flags or input files
inline constexpr int exit_failure = 2;  // StepFailure or degeneracy
inline constexpr int exit_checks = 3;   // some identity check failed

struct Config
{
  flow::RunConfig run;
  std::vector<std::string> check_suite; // empty: every suite
  std::size_t samples = 0;              // 0: per-suite default
  std::string report_path;              // empty: stdout
};

/// Throws ConfigError naming the offending key for unknown keys, wrong types
/// and out-of-range values.
Config parse_config(const nlohmann::json& j);

/// Reads and parses a JSON config file. Throws ConfigError.
Config load_config(const std::filesystem::path& path);

/// The config `init` emits: every key with its default value.
nlohmann::json template_config();

int cmd_run(const Config& config, std::ostream& out, std::ostream& err);
int cmd_check(const Config& config, std::ostream& out, std::ostream& err);

/// Probes hessian_form along `samples` random exact directions (8 when 0).
int cmd_hessian(const Config& config, const std::filesystem::path& snapshot, std::ostream& out,
                std::ostream& err);

/// Writes the template to <out_dir>/config.json, or to `out` when out_dir is empty.
int cmd_init(const std::optional<std::filesystem::path>& out_dir, std::ostream& out, std::ostream& err);

/// Full command line: subcommand plus --config, --out, --seed, --threads.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dgflow::cli
