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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dgflow {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NonPositiveMetric : public Error
{
public:
  using Error::Error;
};

// Raised when a 2-form fails the nondegeneracy/orientation condition the
// operation needs. For field operations `site()` holds the linear grid index.
class DegenerateForm : public Error
{
public:
  explicit DegenerateForm(const std::string& what,
                          std::optional<std::size_t> site = std::nullopt)
    : Error(site ? what + " (site " + std::to_string(*site) + ")" : what)
    , site_(site)
  {
  }

  std::optional<std::size_t> site() const { return site_; }

private:
  std::optional<std::size_t> site_;
};

class NotPositivePlane : public Error
{
public:
  using Error::Error;
};

class NotExact : public Error
{
public:
  using Error::Error;
};

class NoConvergence : public Error
{
public:
  using Error::Error;
};

class StepFailure : public Error
{
public:
  using Error::Error;
};

class ConfigError : public Error
{
public:
  using Error::Error;
};

} // namespace dgflow
