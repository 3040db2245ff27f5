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

#include "dgflow/flow/initial.hpp"

#include "dgflow/errors.hpp"
#include "dgflow/flow/functional.hpp"
#include "dgflow/flow/rng.hpp"
#include "dgflow/lattice/ops.hpp"
#include "dgflow/lattice/spectral.hpp"

#include <string>

namespace dgflow::flow {

lattice::Field1 random_potential(const lattice::Grid& grid, int kmax, std::uint64_t seed)
{
  const int n = grid.n();
  if (kmax < 1 || 2 * kmax >= n)
    throw ConfigError("kmax must satisfy 1 <= kmax < n/2, got kmax = " + std::to_string(kmax) +
                      " with n = " + std::to_string(n));
  const CounterRng base(seed);
  lattice::Spectrum spec(grid.sites() * 4, 0.0);
  const double scale = 0.5 * static_cast<double>(grid.sites());
  auto index = [n](int m) { return m >= 0 ? m : m + n; };

  // Half space of wave vectors: first nonzero entry positive.
  const int w = 2 * kmax + 1;
  std::uint64_t term = 0;
  for (int code = 0; code < w * w * w * w; ++code) {
    int m[4];
    int c = code;
    for (int a = 3; a >= 0; --a) {
      m[a] = c % w - kmax;
      c /= w;
    }
    int lead = 0;
    for (int a = 0; a < 4 && lead == 0; ++a)
      lead = m[a];
    if (lead <= 0)
      continue;
    CounterRng rng = base.split(term++);
    const std::size_t plus = grid.site(index(m[0]), index(m[1]), index(m[2]), index(m[3]));
    const std::size_t minus = grid.site(index(-m[0]), index(-m[1]), index(-m[2]), index(-m[3]));
    for (std::size_t comp = 0; comp < 4; ++comp) {
      const double ca = rng.uniform();
      const double sa = rng.uniform();
      // ca cos(2 pi m.x) + sa sin(2 pi m.x)
      spec[plus * 4 + comp] += scale * lattice::Complex(ca, -sa);
      spec[minus * 4 + comp] += scale * lattice::Complex(ca, sa);
    }
  }
  return lattice::fft_backward<1>(grid, spec);
}

InitialData perturbed_omega1(const lattice::Grid& grid, double epsilon, int kmax, std::uint64_t seed)
{
  if (!(epsilon >= 0.0))
    throw ConfigError("epsilon must be >= 0");
  const auto omega = lattice::Field2::constant(grid, exterior::omega1);
  if (epsilon == 0.0)
    return {omega, lattice::Field1(grid), 0.0};

  lattice::Field1 lambda = random_potential(grid, kmax, seed);
  lambda *= 1.0 / lattice::norm_l2(lattice::d(lambda));
  const lattice::Field2 dl = lattice::d(lambda);
  for (int halvings = 0; halvings < 60; ++halvings, epsilon *= 0.5) {
    lattice::Field2 rho = omega + epsilon * dl;
    if (u_min(rho) > 0.5)
      return {std::move(rho), epsilon * lambda, epsilon};
  }
  throw ConfigError("could not find an admissible initial amplitude");
}

} // namespace dgflow::flow
