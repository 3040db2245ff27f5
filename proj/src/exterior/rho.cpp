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

#include "dgflow/exterior/rho.hpp"

#include "dgflow/errors.hpp"

#include <sstream>

namespace dgflow::exterior {

namespace {

void require_positive(double u)
{
  if (!(u > u_floor)) {
    std::ostringstream msg;
    msg << "2-form is degenerate or negatively oriented (u = " << u << ")";
    throw DegenerateForm(msg.str());
  }
}

void require_nondegenerate(const Form2& rho)
{
  const double pf = u_of(rho); // Pfaffian of the component matrix
  const double scale = std::fmax(1.0, flat_norm_sq(rho));
  if (!(std::fabs(pf) > u_floor * scale))
    throw DegenerateForm("2-form is degenerate");
}

} // namespace

double u_of(const Form2& rho, const Metric4& g) { return 0.5 * wedge22(rho, rho) / g.volume(); }

LinMap4 A_of(const Form2& rho, const Metric4& g)
{
  return {g.matrix().ldlt().solve(to_matrix(rho).transpose())};
}

Metric4 g_rho(const Form2& rho, const Metric4& g)
{
  const double u = u_of(rho, g);
  require_positive(u);
  const Mat4 a = A_of(rho, g).m;
  return Metric4(a.transpose() * g.matrix() * a / u);
}

Mat4 g_rho_matrix(const Form2& rho)
{
  const Mat4 p = to_matrix(rho);
  // A = P^T, so A^T A = P P^T = -P^2.
  return -(p * p) / u_of(rho);
}

Form2 R_rho(const Form2& omega, const Form2& rho)
{
  require_nondegenerate(rho);
  const double vol_rho = 0.5 * wedge22(rho, rho);
  return omega - (wedge22(omega, rho) / vol_rho) * rho;
}

Form3 star_rho_1(const Form1& lambda, const Form2& rho, const Metric4& g)
{
  const double u = u_of(rho, g);
  require_positive(u);
  const Form1 inner = hodge(g, wedge12(lambda, rho));
  return wedge12(inner, rho) / u;
}

Form2 star_rho_2(const Form2& omega, const Form2& rho, const Metric4& g)
{
  require_positive(u_of(rho, g));
  return R_rho(hodge(g, R_rho(omega, rho)), rho);
}

Form2 star_rho_2(const Form2& omega, const Form2& rho)
{
  require_positive(u_of(rho));
  return R_rho(hodge_flat(R_rho(omega, rho)), rho);
}

Form1 star_rho_3(const Form3& gamma, const Form2& rho, const Metric4& g)
{
  return hodge(g_rho(rho, g), gamma);
}

Form2 theta_point(const Form2& rho, const Metric4& g)
{
  const double u = u_of(rho, g);
  require_positive(u);
  const HodgeStar star(g);
  const Form2 s = star(rho);
  const double norm_sq = wedge22(rho, s) / star.volume();
  return s / u - (0.5 * norm_sq / (u * u)) * rho;
}

Form2 theta_point(const Form2& rho)
{
  const double u = u_of(rho);
  require_positive(u);
  return hodge_flat(rho) / u - (0.5 * flat_norm_sq(rho) / (u * u)) * rho;
}

Form2 theta_dot_point(const Form2& rho, const Form2& rho_hat, const Metric4& g)
{
  const double u = u_of(rho, g);
  require_positive(u);
  const HodgeStar star(g);
  const Form2 plus = 0.5 * (rho + star(rho));
  const double plus_sq = star.inner(plus, plus) / (u * u);
  return (rho_hat + star_rho_2(rho_hat, rho, g)) / u - plus_sq * rho_hat;
}

Form2 theta_dot_point(const Form2& rho, const Form2& rho_hat)
{
  const double u = u_of(rho);
  require_positive(u);
  const Form2 plus = sd_split_flat(rho).plus;
  const double plus_sq = flat_norm_sq(plus) / (u * u);
  return (rho_hat + star_rho_2(rho_hat, rho)) / u - plus_sq * rho_hat;
}

LinMap4 j_rho(const LinMap4& j, const Form2& rho)
{
  require_nondegenerate(rho);
  const Mat4 p = to_matrix(rho);
  return {p.partialPivLu().solve(j.m.transpose() * p)};
}

std::array<LinMap4, 3> quaternion_triple(const Form2& w1, const Form2& w2, const Form2& w3)
{
  for (const auto* w : {&w1, &w2, &w3})
    require_nondegenerate(*w);
  const Mat4 p1 = to_matrix(w1);
  const Mat4 p2 = to_matrix(w2);
  const Mat4 p3 = to_matrix(w3);
  return {LinMap4{p3.partialPivLu().solve(p2)}, LinMap4{p1.partialPivLu().solve(p3)},
          LinMap4{p2.partialPivLu().solve(p1)}};
}

const std::array<LinMap4, 3>& standard_complex_structures()
{
  static const std::array<LinMap4, 3> js = quaternion_triple(omega1, omega2, omega3);
  return js;
}

Metric4 metric_from_vol_and_plane(const Form4& dvol, const std::array<Form2, 3>& plane)
{
  const double vol = dvol[0];
  if (!(vol > 0.0))
    throw NotPositivePlane("volume form must be positive");

  // Gram-Schmidt in the pairing (a, b) = a ^ b / (2 dvol).
  auto pairing = [vol](const Form2& a, const Form2& b) { return 0.5 * wedge22(a, b) / vol; };
  double scale = 0.0;
  for (const auto& b : plane)
    scale = std::fmax(scale, std::fabs(pairing(b, b)));
  if (!(scale > 0.0))
    throw NotPositivePlane("plane is null for the wedge pairing");

  std::array<Form2, 3> w;
  for (std::size_t i = 0; i < 3; ++i) {
    Form2 v = plane[i];
    for (std::size_t j = 0; j < i; ++j)
      v -= pairing(v, w[j]) * w[j];
    const double pivot = pairing(v, v);
    if (!(pivot > plane_pivot_tol * scale))
      throw NotPositivePlane("wedge pairing is not positive definite on the plane");
    w[i] = v / std::sqrt(pivot);
  }

  auto js = quaternion_triple(w[0], w[1], w[2]);
  const Mat4 p1 = to_matrix(w[0]);
  Mat4 g = p1 * js[0].m;

  double probe = 0.0;
  for (int a = 0; a < 4; ++a) {
    probe = g(a, a);
    if (std::fabs(probe) > sign_probe_tol)
      break;
  }
  if (probe < 0.0)
    g = -g;
  return Metric4(g);
}

} // namespace dgflow::exterior
