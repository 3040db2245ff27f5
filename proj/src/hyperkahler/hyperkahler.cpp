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

#include "dgflow/hyperkahler/hyperkahler.hpp"

#include "dgflow/errors.hpp"
#include "dgflow/exterior/algebra.hpp"
#include "dgflow/exterior/rho.hpp"
#include "dgflow/flow/functional.hpp"
#include "dgflow/lattice/ops.hpp"

#include <algorithm>
#include <cmath>

namespace dgflow::hyperkahler {

using namespace exterior;
using lattice::Field4;

namespace {

Vector4 as_vector(const Form1& c) { return Vector4{c.c}; }

double scalar_at(const ScalarField& f, std::size_t s) { return f.at(s)[0]; }

template <class Fn>
auto triple(Fn&& fn)
{
  return std::array{fn(std::size_t{0}), fn(std::size_t{1}), fn(std::size_t{2})};
}

ScalarField scalar_from(const lattice::Grid& g, auto&& fn)
{
  return lattice::generate<0>(g, [&](std::size_t s) { return Form0{{fn(s)}}; });
}

double integrate(const lattice::Grid& g, auto&& fn)
{
  return lattice::sum_over(g.sites(), fn) / static_cast<double>(g.sites());
}

} // namespace

const HKTriple& standard_triple()
{
  static const HKTriple t{{omega1, omega2, omega3}, standard_complex_structures()};
  return t;
}

std::array<double, 3> k_point(const Form2& rho)
{
  const double u = u_of(rho);
  if (!(u > u_floor))
    throw DegenerateForm("2-form is degenerate or negatively oriented");
  const auto& w = standard_triple().omegas;
  return {wedge22(w[0], rho) / u, wedge22(w[1], rho) / u, wedge22(w[2], rho) / u};
}

Form2 theta_hk_point(const Form2& rho)
{
  const auto k = k_point(rho);
  const auto& w = standard_triple().omegas;
  Form2 out;
  double k_sq = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    out += k[i] * w[i];
    k_sq += k[i] * k[i];
  }
  return out - 0.5 * k_sq * rho;
}

KFunctions k_functions(const Field2& rho)
{
  flow::require_admissible(rho);
  return {triple([&](std::size_t i) {
    return scalar_from(rho.grid(), [&](std::size_t s) { return k_point(rho.at(s))[i]; });
  })};
}

std::array<double, 3> k_variation(const KFunctions& k)
{
  std::array<double, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& vals = k.K[i].values();
    const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
    v[i] = *hi - *lo;
  }
  return v;
}

double energy_hk(const Field2& rho)
{
  flow::require_admissible(rho);
  return integrate(rho.grid(), [&](std::size_t s) {
    const Form2 w = rho.at(s);
    const auto k = k_point(w);
    return 0.5 * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]) * u_of(w);
  });
}

Field2 theta_hk(const Field2& rho)
{
  flow::require_admissible(rho);
  return lattice::map<2>(rho, [](const Form2& w) { return theta_hk_point(w); });
}

Field1 dk_j_sum(const Field2& rho)
{
  const auto k = k_functions(rho);
  const auto dk = triple([&](std::size_t i) { return lattice::d(k.K[i]); });
  const auto& js = standard_triple().js;
  return lattice::generate<1>(rho.grid(), [&](std::size_t s) {
    const Form2 w = rho.at(s);
    Eigen::Vector4d sum = Eigen::Vector4d::Zero();
    for (std::size_t i = 0; i < 3; ++i)
      sum += j_rho(js[i], w).m.transpose() * to_eigen(dk[i].at(s));
    return to_form1(sum);
  });
}

Field2 grad_hk(const Field2& rho) { return lattice::d(dk_j_sum(rho)); }

VectorField vector_from_potential(const Field2& rho, const Field1& mu)
{
  flow::require_admissible(rho);
  // iota(X) rho has components P^T X = -P X
  return lattice::generate<1>(rho.grid(), [&](std::size_t s) {
    return to_form1(to_matrix(rho.at(s)).partialPivLu().solve(to_eigen(mu.at(s))));
  });
}

VectorField hamiltonian_field(const Field2& rho, const ScalarField& f)
{
  const Field1 df = lattice::d(f);
  return vector_from_potential(rho, -1.0 * df);
}

ScalarField lie_derivative(const VectorField& x, const ScalarField& f)
{
  const Field1 df = lattice::d(f);
  return scalar_from(x.grid(), [&](std::size_t s) { return apply(df.at(s), as_vector(x.at(s))); });
}

VectorField covariant(const VectorField& y, const VectorField& z)
{
  const std::array dz{lattice::partial(z, 0), lattice::partial(z, 1), lattice::partial(z, 2), lattice::partial(z, 3)};
  return lattice::generate<1>(y.grid(), [&](std::size_t s) {
    const Form1 ys = y.at(s);
    Form1 out;
    for (std::size_t a = 0; a < 4; ++a)
      out += ys[a] * dz[a].at(s);
    return out;
  });
}

KhatHhat khat_hhat(const Field2& rho, const Field1& mu)
{
  const Field2 rho_hat = lattice::d(mu);
  const VectorField x = vector_from_potential(rho, mu);
  const auto& w = standard_triple().omegas;
  const auto& g = rho.grid();
  const auto dxw = triple([&](std::size_t i) {
    return lattice::d(lattice::generate<1>(g, [&](std::size_t s) { return interior(as_vector(x.at(s)), w[i]); }));
  });
  auto khat = triple([&](std::size_t i) {
    return scalar_from(g, [&](std::size_t s) {
      const Form2 r = rho.at(s);
      const double u = u_of(r);
      return wedge22(w[i] - (wedge22(w[i], r) / u) * r, rho_hat.at(s)) / u;
    });
  });
  auto hhat = triple([&](std::size_t i) {
    return scalar_from(g, [&](std::size_t s) {
      const Form2 r = rho.at(s);
      return wedge22(dxw[i].at(s), r) / u_of(r);
    });
  });
  return {std::move(khat), std::move(hhat)};
}

double hessian_hk(const Field2& rho, const Field2& rho_hat)
{
  flow::require_admissible(rho);
  const auto& w = standard_triple().omegas;
  return integrate(rho.grid(), [&](std::size_t s) {
    const Form2 r = rho.at(s);
    const Form2 h = rho_hat.at(s);
    const double u = u_of(r);
    const auto k = k_point(r);
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double khat = wedge22(w[i] - k[i] * r, h) / u;
      acc += khat * khat * u - 0.5 * k[i] * k[i] * wedge22(h, h);
    }
    return acc;
  });
}

namespace {

struct HkTerms
{
  KFunctions k;
  KhatHhat kh;
  VectorField x;
  std::array<VectorField, 3> xk;
  std::array<ScalarField, 3> lxk;
  ScalarField u;
};

HkTerms hk_terms(const Field2& rho, const Field1& mu)
{
  KFunctions k = k_functions(rho);
  VectorField x = vector_from_potential(rho, mu);
  auto xk = triple([&](std::size_t i) { return hamiltonian_field(rho, k.K[i]); });
  auto lxk = triple([&](std::size_t i) { return lie_derivative(x, k.K[i]); });
  return {std::move(k), khat_hhat(rho, mu), std::move(x), std::move(xk), std::move(lxk), flow::u_field(rho)};
}

// int sum_i omega_i(X, Y_i) dvol_rho
double omega_pairing(const HkTerms& t, const std::array<VectorField, 3>& y)
{
  const auto& w = standard_triple().omegas;
  return integrate(t.x.grid(), [&](std::size_t s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      acc += evaluate(w[i], as_vector(t.x.at(s)), as_vector(y[i].at(s)));
    return acc * scalar_at(t.u, s);
  });
}

} // namespace

double hessian_hhat(const Field2& rho, const Field1& mu)
{
  const HkTerms t = hk_terms(rho, mu);
  const auto nabla_xk_x = triple([&](std::size_t i) { return covariant(t.xk[i], t.x); });
  const double h_sq = integrate(rho.grid(), [&](std::size_t s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      acc += scalar_at(t.kh.hhat[i], s) * scalar_at(t.kh.hhat[i], s);
    return acc * scalar_at(t.u, s);
  });
  return h_sq + omega_pairing(t, nabla_xk_x);
}

HessianCovReport hessiancov_check(const Field2& rho, const Field1& mu)
{
  const HkTerms t = hk_terms(rho, mu);
  const Field2 rho_hat = lattice::d(mu);
  const auto& w = standard_triple().omegas;
  const auto& g = rho.grid();

  const auto nabla_x_xk = triple([&](std::size_t i) { return covariant(t.x, t.xk[i]); });
  const auto nabla_xk_x = triple([&](std::size_t i) { return covariant(t.xk[i], t.x); });
  const auto bracket = triple([&](std::size_t i) { return nabla_x_xk[i] - nabla_xk_x[i]; });

  HessianCovReport r;
  r.A = integrate(g, [&](std::size_t s) {
    double k_sq = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      k_sq += scalar_at(t.k.K[i], s) * scalar_at(t.k.K[i], s);
    return -0.5 * k_sq * wedge22(rho_hat.at(s), rho_hat.at(s));
  });
  r.B = integrate(g, [&](std::size_t s) {
    const Form1 x_rho = interior(as_vector(t.x.at(s)), rho.at(s));
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      acc += wedge22(wedge11(interior(as_vector(t.xk[i].at(s)), w[i]), x_rho), rho_hat.at(s));
    return acc;
  });
  r.C = omega_pairing(t, bracket);
  r.D = integrate(g, [&](std::size_t s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      acc += scalar_at(t.lxk[i], s) * scalar_at(t.lxk[i], s);
    return acc * scalar_at(t.u, s);
  });
  r.E = integrate(g, [&](std::size_t s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      acc += scalar_at(t.kh.hhat[i], s) * scalar_at(t.lxk[i], s);
    return acc * scalar_at(t.u, s);
  });
  r.residual = std::fabs(r.A + r.B + r.C + r.D - 2.0 * r.E);
  const double scale = std::fabs(r.A) + std::fabs(r.B) + std::fabs(r.C) + std::fabs(r.D) + 2.0 * std::fabs(r.E);
  r.rel_residual = scale > 0.0 ? r.residual / scale : 0.0;

  const double h_sq = integrate(g, [&](std::size_t s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      acc += scalar_at(t.kh.hhat[i], s) * scalar_at(t.kh.hhat[i], s);
    return acc * scalar_at(t.u, s);
  });
  r.lhs = h_sq + omega_pairing(t, nabla_xk_x);
  r.rhs = hessian_hk(rho, rho_hat) + r.B + omega_pairing(t, nabla_x_xk);
  return r;
}

} // namespace dgflow::hyperkahler
