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

#include "dgflow/flow/functional.hpp"

#include "dgflow/errors.hpp"
#include "dgflow/exterior/rho.hpp"
#include "dgflow/lattice/ops.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dgflow::flow {

using namespace exterior;

void require_admissible(const Field2& rho)
{
  for (std::size_t s = 0; s < rho.sites(); ++s) {
    const Form2 w = rho.at(s);
    const double u = u_of(w);
    bool finite = true;
    for (double x : w.c)
      finite = finite && std::isfinite(x);
    if (!finite || !(u > u_floor)) {
      std::ostringstream msg;
      msg << "2-form field is not admissible: u = " << u;
      throw DegenerateForm(msg.str(), s);
    }
  }
}

double u_min(const Field2& rho)
{
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < rho.sites(); ++s) {
    const double u = u_of(rho.at(s));
    if (std::isnan(u))
      return u;
    m = std::min(m, u);
  }
  return m;
}

ScalarField u_field(const Field2& rho)
{
  return lattice::map<0>(rho, [](const Form2& w) { return Form0{{u_of(w)}}; });
}

lattice::MetricField metric_field(const Field2& rho)
{
  require_admissible(rho);
  lattice::MetricField m(rho.sites());
  lattice::parallel_for(rho.sites(), [&](std::size_t s) { m[s] = g_rho_matrix(rho.at(s)); });
  return m;
}

Field2 theta_field(const Field2& rho)
{
  require_admissible(rho);
  return lattice::map<2>(rho, [](const Form2& w) { return theta_point(w); });
}

double energy(const Field2& rho)
{
  require_admissible(rho);
  return lattice::sum_over(rho.sites(),
                           [&](std::size_t s) {
                             const auto [p, m] = sd_split_flat(rho.at(s));
                             const double pp = flat_norm_sq(p);
                             return 2.0 * pp / (pp - flat_norm_sq(m));
                           }) /
         static_cast<double>(rho.sites());
}

double energy_excess(const Field2& rho)
{
  require_admissible(rho);
  return lattice::sum_over(rho.sites(),
                           [&](std::size_t s) {
                             const Form2 w = rho.at(s);
                             return flat_norm_sq(sd_split_flat(w).minus) / u_of(w);
                           }) /
         static_cast<double>(rho.sites());
}

Field2 rhs(const Field2& rho)
{
  const Field3 dtheta = lattice::d(theta_field(rho));
  const Field1 lambda = lattice::generate<1>(rho.grid(), [&](std::size_t s) {
    return hodge3_fast(g_rho_matrix(rho.at(s)), 1.0, dtheta.at(s));
  });
  return lattice::d(lambda);
}

double first_variation(const Field2& rho, const Field2& rho_hat)
{
  return lattice::integrate(lattice::wedge(theta_field(rho), rho_hat));
}

double donaldson_inner(const Field2& a, const Field2& b, const Field2& rho, const lattice::CgOptions& options)
{
  const auto metric = metric_field(rho);
  const Field1 la = lattice::least_norm_potential(a, metric, options);
  const Field1 lb = lattice::least_norm_potential(b, metric, options);
  return lattice::metric_inner(la, lb, metric);
}

double donaldson_norm_sq(const Field2& rho_hat, const Field2& rho, const lattice::CgOptions& options)
{
  const auto metric = metric_field(rho);
  const Field1 l = lattice::least_norm_potential(rho_hat, metric, options);
  return lattice::metric_inner(l, l, metric);
}

double hessian_form(const Field2& rho, const Field2& rho_hat)
{
  require_admissible(rho);
  return lattice::sum_over(rho.sites(),
                           [&](std::size_t s) {
                             const Form2 h = rho_hat.at(s);
                             return wedge22(theta_dot_point(rho.at(s), h), h);
                           }) /
         static_cast<double>(rho.sites());
}

EnergyReport l1_report(const Field2& rho)
{
  EnergyReport r;
  r.energy = energy(rho);
  r.excess = energy_excess(rho);
  const auto n = static_cast<double>(rho.sites());
  r.l1_norm = lattice::sum_over(rho.sites(), [&](std::size_t s) { return std::sqrt(flat_norm_sq(rho.at(s))); }) / n;
  r.c = lattice::integrate(lattice::wedge(rho, rho));
  // E - Vol = 1 + excess with Vol = 1
  r.l1_bound = std::sqrt(r.c * (1.0 + r.excess));
  r.bound_holds = r.l1_norm <= r.l1_bound + 1e-10;
  return r;
}

} // namespace dgflow::flow
