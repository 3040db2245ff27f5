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
#include "sampling.hpp"

namespace dgflow::checks {

using namespace exterior;

SuiteReport theta_suite(const CheckOptions& options)
{
  const std::size_t samples = options.samples ? options.samples : 10000;
  Recorder rec("theta", options.seed);
  rec.declare("theta_wedge_rho", "Theta ^ rho = 0", 1e-12);
  rec.declare("theta_two_forms", "*(rho/u) - |rho/u|^2 rho/2 = -(|rho-|^2 rho+ + |rho+|^2 rho-)/u^2", 1e-11);
  rec.declare("theta_square", "Theta ^ Theta = -2 |rho+|^2 |rho-|^2 / u^3 dvol", 1e-11);
  rec.declare("theta_self_dual", "rho- = 0 => Theta = 0", 1e-12);
  rec.declare("theta_dot_fd", "(Theta(rho + t h) - Theta(rho - t h)) / 2t = Theta_dot(h) + O(t^2), t |h| = 5e-5 |rho|", 1e-4);
  rec.declare("theta_dot_fd_order", "FD error ratio e(t) / e(t/2) = 4 +- 20%", 0.2);
  rec.declare("theta_dot_at_omega", "rho = omega compatible: Theta_dot(h) = -2 h-", 1e-12);

  const flow::CounterRng base(options.seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sampler rnd(base.split(s));
    const Metric4 g = rnd.metric();
    const HodgeStar star(g);
    const Form2 rho = rnd.admissible(g);
    const Form2 h = rnd.form<2>();
    const double u = u_of(rho, g);

    const Form2 theta = theta_point(rho, g);
    const double th_n = max_abs(theta);
    const double rho_n = max_abs(rho);
    rec.record("theta_wedge_rho", wedge22(theta, rho), 0.0, std::max(1.0, th_n * rho_n));

    const auto [plus, minus] = sd_split(rho, g);
    const double pp = star.inner(plus, plus);
    const double mm = star.inner(minus, minus);
    const Form2 alt = -1.0 / (u * u) * (mm * plus + pp * minus);
    rec.record("theta_two_forms", th_n, max_abs(alt), max_abs(theta - alt), std::max(1.0, th_n));
    const double sq = wedge22(theta, theta) / star.volume();
    const double sq_ref = -2.0 * pp * mm / (u * u * u);
    rec.record("theta_square", sq, sq_ref, std::max(1.0, th_n * th_n));

    const Form2 sd = plus * (1.0 / std::sqrt(std::max(pp, 1e-300)));
    rec.record("theta_self_dual", max_abs(theta_point(sd, g)), 0.0, std::max(1.0, max_abs(sd)));

    const Form2 dot = theta_dot_point(rho, h, g);
    auto fd = [&](double t) { return (theta_point(rho + t * h, g) - theta_point(rho - t * h, g)) / (2 * t); };
    // Theta is homogeneous of degree -1, so steps are taken relative to |rho|
    const double step = 1e-4 * rho_n / max_abs(h);
    const double e1 = max_abs(fd(step) - dot);
    const double e2 = max_abs(fd(0.5 * step) - dot);
    rec.record("theta_dot_fd", max_abs(fd(0.5 * step)), max_abs(dot), e2, std::max(1.0, max_abs(dot)));
    const double ratio = e1 / e2;
    rec.record("theta_dot_fd_order", ratio, 4.0, std::fabs(ratio - 4.0), 4.0);

    const CompatibleTriple t = compatible_triple(g);
    const Form2 expected = -2.0 * sd_split(h, g).minus;
    const Form2 got = theta_dot_point(t.omegas[0], h, g);
    rec.record("theta_dot_at_omega", max_abs(got), max_abs(expected), max_abs(got - expected),
               std::max(1.0, max_abs(expected)));
  }
  return rec.take();
}

} // namespace dgflow::checks
