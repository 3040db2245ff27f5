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
#include "dgflow/exterior/algebra.hpp"
#include "dgflow/exterior/hodge.hpp"
#include "dgflow/exterior/rho.hpp"
#include "dgflow/flow/functional.hpp"
#include "dgflow/hyperkahler/hyperkahler.hpp"
#include "fields.hpp"
#include "sampling.hpp"

namespace dgflow::checks {

using namespace exterior;

SuiteReport hyperkahler_suite(const CheckOptions& options)
{
  const std::size_t samples = options.samples ? options.samples : 10000;
  const int n = options.n;
  const auto sch = options.scheme;
  Recorder rec("hyperkahler", options.seed);
  rec.declare("sd_part_from_K", "rho+ = (u/2) sum K_i omega_i", 1e-11);
  rec.declare("sd_norm_from_K", "2 |rho+|^2 = u^2 sum K_i^2", 1e-11);
  rec.declare("sd_minus_norm", "|rho+|^2 - |rho-|^2 = 2u", 1e-11);
  rec.declare("theta_hk_point", "sum (K_i omega_i - K_i^2 rho / 2) = Theta", 1e-11);
  rec.declare("omega_rho_X", "(iota(X) omega) ^ rho + omega^rho ^ iota(X) rho = 0", 1e-12);
  rec.declare("omega_rho_X_star", "(iota(X) omega) ^ rho = -*^rho iota(JX) rho", 1e-10);
  rec.declare("energy_hk", "int sum K_i^2 dvol_rho / 2 = int 2|rho+|^2 / (|rho+|^2 - |rho-|^2)", 1e-10, n, sch);
  rec.declare("theta_hk_field", "Theta_hk = Theta on the grid", 1e-10, n, sch);
  rec.declare("hessian_hk", "int sum (Khat_i^2 dvol_rho - K_i^2 h^2 / 2) = int Theta_dot(h) ^ h", 1e-10, n, sch);
  rec.declare("grad_hk", "sum d(dK_i o J_i^rho) = -d *^rho dTheta (band-limited rho)", 1e-8, n, sch);
  rec.declare("theta_differential", "dTheta = *^rho sum dK_i o J_i^rho (band-limited rho)", 1e-8, n, sch);
  rec.declare("hessian_hhat_at_omega1", "int sum Hhat_i^2 dvol = H_omega1(h)", 1e-10, n, sch);

  const auto& tri = hyperkahler::standard_triple();
  const flow::CounterRng base(options.seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sampler rnd(base.split(s));
    const Form2 rho = std::exp(rnd.uniform()) * rnd.admissible(Metric4::euclidean());
    const double u = u_of(rho);
    const auto k = hyperkahler::k_point(rho);
    const auto [plus, minus] = sd_split_flat(rho);
    const double scale = std::max(1.0, flat_norm_sq(rho));
    const Form2 rebuilt = 0.5 * u * (k[0] * tri.omegas[0] + k[1] * tri.omegas[1] + k[2] * tri.omegas[2]);
    rec.record("sd_part_from_K", max_abs(plus), max_abs(rebuilt), max_abs(plus - rebuilt), std::sqrt(scale));
    rec.record("sd_norm_from_K", 2 * flat_norm_sq(plus), u * u * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]), scale);
    rec.record("sd_minus_norm", flat_norm_sq(plus) - flat_norm_sq(minus), 2 * u, scale);
    const Form2 th = theta_point(rho);
    const Form2 th_hk = hyperkahler::theta_hk_point(rho);
    rec.record("theta_hk_point", max_abs(th_hk), max_abs(th), max_abs(th - th_hk), std::max(1.0, max_abs(th)));

    const Vector4 x = rnd.vector();
    for (std::size_t i = 0; i < 3; ++i) {
      const Form2& w = tri.omegas[i];
      const Form2 w_rho = w - (wedge22(w, rho) / u) * rho;
      const Form3 a = wedge12(interior(x, w), rho);
      const Form3 lhs = a + wedge12(interior(x, rho), w_rho);
      rec.record("omega_rho_X", max_abs(lhs), 0.0, std::max(1.0, max_abs(a)));
      const Form3 b = -1.0 * star_rho_1(interior(tri.js[i](x), rho), rho, Metric4::euclidean());
      rec.record("omega_rho_X_star", max_abs(a), max_abs(b), max_abs(a - b),
                 std::max(1.0, max_abs(b)) * std::max(1.0, flat_norm_sq(rho) / u));
    }
  }

  const lattice::Grid grid(n, sch);
  const flow::CounterRng fields(options.seed ^ 0x5eedull);
  for (std::uint64_t f = 0; f < 3; ++f) {
    const std::uint64_t seed = fields.at(f);
    const auto rho = flow::perturbed_omega1(grid, 0.3, 2, seed).rho;
    const auto mu = scaled_potential(grid, 2, seed + 1, 1.0);
    const auto h = lattice::d(mu);

    const double e = flow::energy(rho);
    rec.record("energy_hk", hyperkahler::energy_hk(rho), e, e);
    const auto th = flow::theta_field(rho);
    const double th_n = lattice::max_abs(th);
    rec.record("theta_hk_field", lattice::max_abs(hyperkahler::theta_hk(rho)), th_n,
               lattice::max_abs(hyperkahler::theta_hk(rho) - th), std::max(1.0, th_n));
    const double hf = flow::hessian_form(rho, h);
    rec.record("hessian_hk", hyperkahler::hessian_hk(rho, h), hf, std::fabs(hf));

    // a band-limited field: all products of its Fourier modes are resolved
    const auto smooth = flow::perturbed_omega1(grid, 1e-3, 1, seed).rho;
    const auto r = flow::rhs(smooth);
    const auto gh = hyperkahler::grad_hk(smooth);
    rec.record("grad_hk", lattice::max_abs(gh), lattice::max_abs(r), lattice::max_abs(gh + r), lattice::max_abs(r));
    const auto dth = lattice::d(flow::theta_field(smooth));
    const auto star = lattice::map<3>(smooth, hyperkahler::dk_j_sum(smooth), [](const Form2& w, const Form1& l) {
      return star_rho_1(l, w, Metric4::euclidean());
    });
    rec.record("theta_differential", lattice::max_abs(dth), lattice::max_abs(star), lattice::max_abs(dth - star),
               lattice::max_abs(dth));

    const auto omega = lattice::Field2::constant(grid, omega1);
    const double h_min = flow::hessian_form(omega, h);
    rec.record("hessian_hhat_at_omega1", hyperkahler::hessian_hhat(omega, mu), h_min, h_min);
  }
  return rec.take();
}

} // namespace dgflow::checks
