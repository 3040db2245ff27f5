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

#include "dgflow/lattice/field.hpp"

#include <cstdint>

namespace dgflow::flow {

/// Random real trigonometric 1-form with wavenumbers |m_a| <= kmax in every
/// direction, coefficients uniform in [-1, 1) from CounterRng(seed). The
/// coefficients do not depend on the grid, so the same seed gives the same
/// continuous 1-form on every grid with n > 2 kmax.
lattice::Field1 random_potential(const lattice::Grid& grid, int kmax, std::uint64_t seed);

struct InitialData
{
  lattice::Field2 rho;
  lattice::Field1 potential; // rho = omega1 + d(potential)
  double epsilon = 0.0;      // amplitude actually used
};

/// rho0 = omega1 + epsilon d(lambda) / ||d lambda||_{L^2}. epsilon is halved
/// until u_min > 0.5. epsilon = 0 gives rho0 = omega1. Throws ConfigError if
/// kmax >= n/2.
InitialData perturbed_omega1(const lattice::Grid& grid, double epsilon, int kmax, std::uint64_t seed);

} // namespace dgflow::flow
