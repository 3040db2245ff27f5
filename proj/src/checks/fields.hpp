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

#include "dgflow/flow/initial.hpp"
#include "dgflow/flow/rng.hpp"
#include "dgflow/lattice/ops.hpp"

namespace dgflow::checks {

/// Potential with ||d mu||_{L^2} = amplitude.
inline lattice::Field1 scaled_potential(const lattice::Grid& g, int kmax, std::uint64_t seed, double amplitude)
{
  lattice::Field1 mu = flow::random_potential(g, kmax, seed);
  mu *= amplitude / lattice::norm_l2(lattice::d(mu));
  return mu;
}

} // namespace dgflow::checks
