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

#include "dgflow/checks/suites.hpp"

#include "dgflow/errors.hpp"

namespace dgflow::checks {

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"appendixA", "theta", "hyperkahler", "hessiancov", "flow"};
  return names;
}

SuiteReport run_suite(const std::string& name, const CheckOptions& options)
{
  if (name == "appendixA")
    return exterior_suite(options);
  if (name == "theta")
    return theta_suite(options);
  if (name == "hyperkahler")
    return hyperkahler_suite(options);
  if (name == "hessiancov")
    return hessiancov_suite(options);
  if (name == "flow")
    return flow_suite(options);
  std::string known;
  for (const auto& s : suite_names())
    known += (known.empty() ? "" : ", ") + s;
  throw ConfigError("unknown check suite '" + name + "' (known: " + known + ")");
}

} // namespace dgflow::checks
