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

#include "dgflow/exterior/forms.hpp"
#include "dgflow/exterior/hodge.hpp"
#include "dgflow/exterior/metric.hpp"
#include "dgflow/exterior/rho.hpp"
#include "dgflow/flow/rng.hpp"

#include <Eigen/Dense>

namespace dgflow::checks {

// Random pointwise data driven by a CounterRng sub-stream, one per sample.
class Sampler
{
public:
  explicit Sampler(flow::CounterRng rng) : rng_(rng) {}

  double uniform(double lo = -1.0, double hi = 1.0) { return rng_.uniform(lo, hi); }

  template <int K>
  exterior::Form<K> form()
  {
    exterior::Form<K> f;
    for (auto& x : f.c)
      x = uniform();
    return f;
  }

  exterior::Vector4 vector()
  {
    exterior::Vector4 v;
    for (auto& x : v.c)
      x = uniform();
    return v;
  }

  /// SPD metric, volume in [e^-1, e], condition number below about 20.
  exterior::Metric4 metric()
  {
    exterior::Mat4 b;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        b(i, j) = uniform();
    exterior::Mat4 g = b * b.transpose() + 0.5 * exterior::Mat4::Identity();
    g *= std::exp(0.5 * uniform()) / std::pow(g.determinant(), 0.25);
    return exterior::Metric4(g);
  }

  /// rho with u(rho, g) >= ratio |rho|_g^2. Since |rho|_g^2 >= 2u the ratio
  /// is at most 1/2; it bounds the condition number of g_rho by cond(g)/ratio.
  exterior::Form2 admissible(const exterior::Metric4& g, double ratio = kAdmissibleRatio)
  {
    const exterior::HodgeStar star(g);
    const double s = std::pow(g.volume(), 0.5);
    for (;;) {
      const exterior::Form2 rho = s * form<2>();
      if (exterior::u_of(rho, g) >= ratio * star.inner(rho, rho))
        return rho;
    }
  }

  static constexpr double kAdmissibleRatio = 0.05;

  /// Rotation with determinant +1.
  exterior::Mat4 rotation()
  {
    exterior::Mat4 b;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        b(i, j) = uniform();
    Eigen::HouseholderQR<exterior::Mat4> qr(b);
    exterior::Mat4 q = qr.householderQ();
    if (q.determinant() < 0)
      q.col(0) *= -1.0;
    return q;
  }

private:
  flow::CounterRng rng_;
};

/// Symmetric positive square root; Q^T Q = g with det Q > 0.
inline exterior::Mat4 metric_root(const exterior::Metric4& g)
{
  Eigen::SelfAdjointEigenSolver<exterior::Mat4> es(g.matrix());
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

/// Pullback of a 2-form along the linear map Q: (Q^* w)(v, x) = w(Qv, Qx).
inline exterior::Form2 pullback(const exterior::Form2& w, const exterior::Mat4& q)
{
  return exterior::from_matrix(q.transpose() * exterior::to_matrix(w) * q);
}

/// omega_i pulled back along sqrt(g): a g-orthonormal basis of Lambda^+_g with
/// complex structures Q^-1 J_i Q and omega_i(., J_i .) = g.
struct CompatibleTriple
{
  std::array<exterior::Form2, 3> omegas;
  std::array<exterior::LinMap4, 3> js;
};

inline CompatibleTriple compatible_triple(const exterior::Metric4& g)
{
  const exterior::Mat4 q = metric_root(g);
  const exterior::Mat4 qinv = q.inverse();
  const auto& std_js = exterior::standard_complex_structures();
  const std::array<exterior::Form2, 3> base{exterior::omega1, exterior::omega2, exterior::omega3};
  CompatibleTriple t;
  for (std::size_t i = 0; i < 3; ++i) {
    t.omegas[i] = pullback(base[i], q);
    t.js[i] = exterior::LinMap4{qinv * std_js[i].m * q};
  }
  return t;
}

} // namespace dgflow::checks
