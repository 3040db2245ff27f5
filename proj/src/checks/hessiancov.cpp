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
#include "dgflow/exterior/forms.hpp"
#include "dgflow/hyperkahler/hyperkahler.hpp"
#include "fields.hpp"

#include <cmath>

namespace dgflow::checks {

SuiteReport hessiancov_suite(const CheckOptions& options)
{
  const std::size_t count = options.samples ? options.samples : 3;
  const int n0 = options.n;
  const int n1 = 3 * n0 / 2 + (3 * n0 / 2) % 2;
  const auto sch = options.scheme;
  Recorder rec("hessiancov", options.seed);
  rec.declare("abcde_coarse", "A + B + C + D = 2E", 1e-3, n0, sch);
  rec.declare("abcde_fine", "A + B + C + D = 2E", 1e-3, n1, sch);
  rec.declare("both_sides_coarse", "int sum (Hhat^2 + omega(X, nabla_{X_K} X)) dvol = int sum (Khat^2 dvol - K^2 h^2 / 2) + B + int sum omega(X, nabla_X X_K) dvol", 1e-3, n0, sch);
  rec.declare("both_sides_fine", "int sum (Hhat^2 + omega(X, nabla_{X_K} X)) dvol = int sum (Khat^2 dvol - K^2 h^2 / 2) + B + int sum omega(X, nabla_X X_K) dvol", 1e-3, n1, sch);
  // observed residual reduction against the reduction the scheme promises
  const double promised = sch == lattice::Scheme::spectral ? 10.0 : 0.8 * std::pow(double(n1) / n0, 2);
  rec.declare("refinement", "residual(n) / residual(3n/2) >= " + std::to_string(promised), 0.0, n1, sch);
  rec.declare("abcde_omega1", "rho = omega1: A + B = 0, C = D = E = 0", 1e-10, n0, sch);

  const flow::CounterRng seeds(options.seed);
  for (std::uint64_t f = 0; f < count; ++f) {
    const std::uint64_t seed = seeds.at(f);
    double res[2] = {0, 0};
    for (int level = 0; level < 2; ++level) {
      const lattice::Grid grid(level ? n1 : n0, sch);
      const auto rho = flow::perturbed_omega1(grid, 0.1, 1, seed).rho;
      const auto mu = scaled_potential(grid, 1, seed + 1, 0.3);
      const auto r = hyperkahler::hessiancov_check(rho, mu);
      const double scale = std::fabs(r.A) + std::fabs(r.B) + std::fabs(r.C) + std::fabs(r.D) + 2 * std::fabs(r.E);
      rec.record(level ? "abcde_fine" : "abcde_coarse", r.A + r.B + r.C + r.D, 2 * r.E, scale);
      rec.record(level ? "both_sides_fine" : "both_sides_coarse", r.lhs, r.rhs, std::fabs(r.lhs));
      res[level] = r.rel_residual;
    }
    const double ratio = res[0] / std::max(res[1], 1e-300);
    rec.record("refinement", ratio, promised, std::max(0.0, promised - ratio), promised);

    const lattice::Grid grid(n0, sch);
    const auto omega = lattice::Field2::constant(grid, exterior::omega1);
    const auto mu = scaled_potential(grid, 2, seed + 2, 1.0);
    const auto r = hyperkahler::hessiancov_check(omega, mu);
    const double worst = std::max({std::fabs(r.A + r.B), std::fabs(r.C), std::fabs(r.D), std::fabs(r.E)});
    rec.record("abcde_omega1", worst, 0.0, 1.0);
  }
  return rec.take();
}

} // namespace dgflow::checks
