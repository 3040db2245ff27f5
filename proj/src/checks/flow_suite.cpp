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
#include "dgflow/exterior/rho.hpp"
#include "dgflow/flow/functional.hpp"
#include "fields.hpp"

#include <cmath>
#include <numbers>

namespace dgflow::checks {

using exterior::Form2;

SuiteReport flow_suite(const CheckOptions& options)
{
  const std::size_t pairs = options.samples ? options.samples : 20;
  const int n = options.n;
  const auto sch = options.scheme;
  const lattice::Grid grid(n, sch);
  Recorder rec("flow", options.seed);
  rec.declare("gradient_consistency", "dE(rho) h = -<rhs(rho), h>_rho", 1e-6, n, sch);
  rec.declare("first_variation_fd", "(E(rho + t h) - E(rho - t h)) / 2t = int Theta ^ h, t = 5e-4", 1e-4, n, sch);
  rec.declare("hessian_fd", "(dE(rho + t h) h - dE(rho - t h) h) / 2t = int Theta_dot(h) ^ h, t = 5e-4", 1e-4, n, sch);
  rec.declare("hessian_symmetric", "int Theta_dot(a) ^ b = int Theta_dot(b) ^ a", 1e-10, n, sch);
  rec.declare("descent", "dE(rho) rhs(rho) = -|rhs(rho)|_rho^2", 1e-6, n, sch);
  rec.declare("hessian_at_minimum", "H_omega1(h) = int |h|^2 dvol", 1e-10, n, sch);
  rec.declare("hessian_worked_value", "H_omega1(d(sin(2 pi x0) e1)) = 2 pi^2", 1e-10, n, sch);
  rec.declare("donaldson_worked_value", "|d(sin(2 pi x0) e1)|_omega1^2 = 1/2", 1e-10, n, sch);

  const flow::CounterRng seeds(options.seed);
  for (std::uint64_t f = 0; f < pairs; ++f) {
    const std::uint64_t seed = seeds.at(f);
    const auto rho = flow::perturbed_omega1(grid, 0.1, 2, seed).rho;
    const auto h = lattice::d(scaled_potential(grid, 2, seed + 1, 1.0));
    const double fv = flow::first_variation(rho, h);
    const auto r = flow::rhs(rho);
    const double ip = flow::donaldson_inner(r, h, rho);
    rec.record("gradient_consistency", fv, -ip, std::fabs(fv));

    if (f < 5) {
      const double fd = (flow::energy(rho + 5e-4 * h) - flow::energy(rho - 5e-4 * h)) / 1e-3;
      rec.record("first_variation_fd", fd, fv, std::fabs(fv));
      const double hf = flow::hessian_form(rho, h);
      const double hfd = (flow::first_variation(rho + 5e-4 * h, h) - flow::first_variation(rho - 5e-4 * h, h)) / 1e-3;
      rec.record("hessian_fd", hfd, hf, std::fabs(hf));
      const auto b = lattice::d(scaled_potential(grid, 2, seed + 2, 1.0));
      auto bilinear = [&](const lattice::Field2& x, const lattice::Field2& y) {
        const auto th = lattice::map<2>(rho, x, [](const Form2& w, const Form2& v) {
          return exterior::theta_dot_point(w, v);
        });
        return lattice::integrate(lattice::wedge(th, y));
      };
      const double ab = bilinear(h, b);
      rec.record("hessian_symmetric", ab, bilinear(b, h), std::max(1.0, std::fabs(ab)));
      const double norm = flow::donaldson_norm_sq(r, rho);
      rec.record("descent", flow::first_variation(rho, r), -norm, norm);
    }
  }

  const auto omega = lattice::Field2::constant(grid, exterior::omega1);
  const flow::CounterRng hseeds(options.seed ^ 0xc0ffeeull);
  for (std::uint64_t f = 0; f < 50; ++f) {
    const int kmax = 1 + static_cast<int>(f % static_cast<std::uint64_t>(n / 2 - 1));
    const auto h = lattice::d(scaled_potential(grid, kmax, hseeds.at(f), 1.0));
    const double l2 = lattice::inner_l2(h, h);
    rec.record("hessian_at_minimum", flow::hessian_form(omega, h), l2, l2);
  }
  const double pi = std::numbers::pi;
  const auto sin_e1 = lattice::Field1::sample(grid, [pi](const exterior::Vector4& x) {
    return std::sin(2 * pi * x[0]) * exterior::basis_covector(1);
  });
  const auto h = lattice::d(sin_e1);
  rec.record("hessian_worked_value", flow::hessian_form(omega, h), 2 * pi * pi, 2 * pi * pi);
  rec.record("donaldson_worked_value", flow::donaldson_norm_sq(h, omega), 0.5, 0.5);
  return rec.take();
}

} // namespace dgflow::checks
