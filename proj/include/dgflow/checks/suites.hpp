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

#include "dgflow/checks/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dgflow::checks {

struct CheckOptions
{
  std::uint64_t seed = 1;
  std::size_t samples = 0; // 0: the suite default
  int n = 8;               // grid for field identities
  lattice::Scheme scheme = lattice::Scheme::spectral;
};

/// Pointwise exterior-algebra identities (default 100000 samples).
SuiteReport exterior_suite(const CheckOptions& options);

/// Pointwise identities for Theta and its derivative (default 10000 samples).
SuiteReport theta_suite(const CheckOptions& options);

/// K_i identities and the cross-formula equalities on fields.
SuiteReport hyperkahler_suite(const CheckOptions& options);

/// The A + B + C + D = 2E ledger at n and 3n/2, and at omega1.
SuiteReport hessiancov_suite(const CheckOptions& options);

/// Gradient/metric consistency and the Hessian at the minimum.
SuiteReport flow_suite(const CheckOptions& options);

const std::vector<std::string>& suite_names();

/// Dispatch by name; throws ConfigError for an unknown suite.
SuiteReport run_suite(const std::string& name, const CheckOptions& options);

} // namespace dgflow::checks
