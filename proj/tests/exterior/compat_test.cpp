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

// Compatible triples (omega, J, g) and the reconstruction of a metric from
// its self-dual plane.

#include "dgflow/errors.hpp"
#include "dgflow/exterior/rho.hpp"
#include "support/random_forms.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <gtest/gtest.h>

namespace {

using namespace dgflow::exterior;
using dgflow::testing::max_diff;
using dgflow::testing::RandomForms;

// Pullback of a 2-form along the linear map Q: (Q^*w)(v, x) = w(Qv, Qx).
Form2 pullback(const Form2& w, const Mat4& q) { return from_matrix(q.transpose() * to_matrix(w) * q); }

// Random orientation-preserving linear map with condition number below 8.
Mat4 random_gl_plus(RandomForms& rnd)
{
  for (;;) {
    Mat4 q;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        q(i, j) = rnd.uniform() + (i == j ? 1.5 : 0.0);
    if (q.determinant() < 0)
      q.col(0) *= -1.0;
    Eigen::JacobiSVD<Mat4> svd(q);
    if (svd.singularValues()(0) < 8.0 * svd.singularValues()(3))
      return q;
  }
}

// 6x6 matrix of hodge(g, .) on the component basis.
Eigen::Matrix<double, 6, 6> star_matrix(const Metric4& g)
{
  Eigen::Matrix<double, 6, 6> s;
  for (std::size_t j = 0; j < 6; ++j) {
    Form2 e;
    e[j] = 1.0;
    const Form2 col = hodge(g, e);
    for (std::size_t i = 0; i < 6; ++i)
      s(static_cast<int>(i), static_cast<int>(j)) = col[i];
  }
  return s;
}

// Basis of the +1 eigenspace of the star, the self-dual plane.
std::array<Form2, 3> self_dual_basis(const Metric4& g)
{
  Eigen::EigenSolver<Eigen::Matrix<double, 6, 6>> es(star_matrix(g));
  std::array<Form2, 3> out;
  std::size_t found = 0;
  for (int k = 0; k < 6; ++k) {
    if (std::fabs(es.eigenvalues()(k).real() - 1.0) > 1e-8)
      continue;
    EXPECT_LT(found, 3u);
    for (std::size_t i = 0; i < 6; ++i)
      out[found][i] = es.eigenvectors()(static_cast<int>(i), k).real();
    ++found;
  }
  EXPECT_EQ(found, 3u);
  return out;
}

TEST(MetricFromPlane, StandardAndPermuted)
{
  const auto g = metric_from_vol_and_plane(volume_form(), {omega1, omega2, omega3});
  EXPECT_LT(max_diff(g.matrix(), Mat4::Identity()), 1e-15);
  const auto gp = metric_from_vol_and_plane(volume_form(), {omega2, omega3, omega1});
  EXPECT_LT(max_diff(gp.matrix(), Mat4::Identity()), 1e-14);
  const auto gm = metric_from_vol_and_plane(volume_form(), {omega3, omega1 + omega2, omega2 - omega3});
  EXPECT_LT(max_diff(gm.matrix(), Mat4::Identity()), 1e-14);
  const auto g2 = metric_from_vol_and_plane(volume_form(2.0), {omega1, omega2, omega3});
  EXPECT_LT(max_diff(g2.matrix(), std::sqrt(2.0) * Mat4::Identity()), 1e-14);
}

TEST(MetricFromPlane, RoundTripThroughSelfDualPlane)
{
  RandomForms rnd(41);
  for (int s = 0; s < 200; ++s) {
    const auto g0 = rnd.metric();
    const auto plane = self_dual_basis(g0);
    const auto g = metric_from_vol_and_plane(volume_form(g0.volume()), plane);
    EXPECT_LT(max_diff(g.matrix(), g0.matrix()), 1e-9);
    EXPECT_NEAR(g.volume(), g0.volume(), 1e-12);
    for (const auto& w : plane)
      EXPECT_LT(max_diff(hodge(g, w), w), 1e-9);
  }
}

TEST(MetricFromPlane, RejectsBadInput)
{
  EXPECT_THROW(metric_from_vol_and_plane(volume_form(-1.0), {omega1, omega2, omega3}),
               dgflow::NotPositivePlane);
  const Form2 bar1{{1, 0, 0, -1, 0, 0}};
  EXPECT_THROW(metric_from_vol_and_plane(volume_form(), {omega1, omega2, bar1}), dgflow::NotPositivePlane);
  EXPECT_THROW(metric_from_vol_and_plane(volume_form(), {omega1, omega2, omega1 + omega2}),
               dgflow::NotPositivePlane);
}

TEST(Compatible, StarOfOmegaWedgeLambda)
{
  // hodge(g, omega ^ lambda) = -lambda o J for compatible (omega, J, g).
  RandomForms rnd(42);
  const auto& js = standard_complex_structures();
  for (int s = 0; s < 200; ++s) {
    const Mat4 q = random_gl_plus(rnd);
    const Metric4 g(q.transpose() * q);
    const std::size_t i = static_cast<std::size_t>(s % 3);
    const Form2 w = pullback(standard_omegas[i], q);
    const LinMap4 j{q.inverse() * js[i].m * q};
    const auto l = rnd.form<1>();
    EXPECT_LT(max_diff(hodge(g, wedge21(w, l)), -compose(l, j)), 1e-10);
  }
}

TEST(Compatible, CharacterizationBothDirections)
{
  RandomForms rnd(43);
  for (int s = 0; s < 200; ++s) {
    const Mat4 q = random_gl_plus(rnd);
    const Metric4 g(q.transpose() * q);
    const double vol = g.volume();

    // compatible: g = omega(., J .) with J^2 = -1 => equal volumes and self-dual
    const Form2 w = pullback(omega1, q);
    EXPECT_NEAR(0.5 * wedge22(w, w), vol, 1e-10 * vol);
    EXPECT_LT(max_diff(hodge(g, w), w), 1e-10);

    // converse: a self-dual form with the right volume defines a complex
    // structure J = P^{-1} G, which is orthogonal
    const Form2 sd = sd_split(rnd.form<2>(), g).plus;
    const Form2 wn = sd * std::sqrt(vol / (0.5 * wedge22(sd, sd)));
    const Mat4 jn = to_matrix(wn).inverse() * g.matrix();
    EXPECT_LT(max_diff(jn * jn, -Mat4::Identity()), 1e-9);
    EXPECT_LT(max_diff(jn.transpose() * g.matrix() * jn, g.matrix()), 1e-9);

    // anti-self-dual form with the same volume magnitude: P^{-1} G is not a
    // complex structure
    const Form2 asd = sd_split(rnd.form<2>(), g).minus;
    const Mat4 ja = to_matrix(asd).inverse() * g.matrix();
    EXPECT_GT(max_diff(ja * ja, -Mat4::Identity()), 1e-3);
    // and a self-dual form of the wrong volume is not either
    const Mat4 j2 = to_matrix(2.0 * wn).inverse() * g.matrix();
    EXPECT_GT(max_diff(j2 * j2, -Mat4::Identity()), 1e-3);
  }
}

TEST(Compatible, GRhoFromTwistedPair)
{
  // g^rho = (R^rho omega)(., J^rho .)
  RandomForms rnd(44);
  const auto& js = standard_complex_structures();
  for (int s = 0; s < 200; ++s) {
    const Mat4 q = random_gl_plus(rnd);
    const Metric4 g(q.transpose() * q);
    const std::size_t i = static_cast<std::size_t>(s % 3);
    const Form2 w = pullback(standard_omegas[i], q);
    const LinMap4 j{q.inverse() * js[i].m * q};
    const Form2 rho = std::sqrt(g.volume()) * rnd.admissible(Metric4::euclidean(), 0.2);
    const Mat4 lhs = g_rho(rho, g).matrix();
    const Mat4 rhs = to_matrix(R_rho(w, rho)) * j_rho(j, rho).m;
    EXPECT_LT(max_diff(lhs, rhs), 1e-10 * std::fmax(1.0, lhs.cwiseAbs().maxCoeff()));
  }
}

void check_triple_properties(const std::array<Form2, 3>& w, const std::array<LinMap4, 3>& js,
                             RandomForms& rnd)
{
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_LT(max_diff((js[i] * js[i]).m, -Mat4::Identity()), 1e-10);
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    EXPECT_LT(max_diff((js[j] * js[k]).m, js[i].m), 1e-10);
    EXPECT_LT(max_diff((js[k] * js[j]).m, -js[i].m), 1e-10);
  }
  for (int s = 0; s < 20; ++s) {
    const auto v = rnd.vector();
    const auto x = rnd.vector();
    Mat4 frame;
    frame.col(0) = to_eigen(v);
    for (int i = 0; i < 3; ++i)
      frame.col(i + 1) = to_eigen(js[static_cast<std::size_t>(i)](v));
    EXPECT_GT(std::fabs(frame.determinant()), 1e-12);
    const double q0 = evaluate(w[0], v, js[0](v));
    EXPECT_GT(q0, 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(evaluate(w[i], v, js[i](v)), q0, 1e-10 * std::fmax(1.0, q0));
      EXPECT_NEAR(evaluate(w[i], x, js[i](v)), evaluate(w[i], v, js[i](x)), 1e-10);
    }
  }
}

TEST(Quaternion, TripleProperties)
{
  RandomForms rnd(45);
  check_triple_properties(standard_omegas, standard_complex_structures(), rnd);
  const auto& js0 = standard_complex_structures();
  for (int s = 0; s < 100; ++s) {
    const Mat4 q = random_gl_plus(rnd);
    std::array<Form2, 3> w;
    for (std::size_t i = 0; i < 3; ++i)
      w[i] = pullback(standard_omegas[i], q);
    const auto js = quaternion_triple(w[0], w[1], w[2]);
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_LT(max_diff(js[i].m, q.inverse() * js0[i].m * q), 1e-10);
    check_triple_properties(w, js, rnd);
  }
}

TEST(Quaternion, AnticommutingCompatibleTriples)
{
  // Orthogonal, pairwise anticommuting complex structures multiply to +-J3.
  RandomForms rnd(46);
  const auto& js = standard_complex_structures();
  for (int s = 0; s < 100; ++s) {
    const Mat4 q = rnd.rotation();
    std::array<Mat4, 3> c;
    for (std::size_t i = 0; i < 3; ++i)
      c[i] = q.transpose() * js[i].m * q;
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_LT(max_diff(c[i].transpose() * c[i], Mat4::Identity()), 1e-13);
      for (std::size_t j = i + 1; j < 3; ++j)
        EXPECT_LT(max_diff(c[i] * c[j], -c[j] * c[i]), 1e-13);
    }
    const Mat4 prod = c[0] * c[1];
    EXPECT_LT(std::min(max_diff(prod, c[2]), max_diff(prod, -c[2])), 1e-13);
    // with one sign flipped the product flips too
    EXPECT_LT(max_diff((-c[0]) * c[1], -c[2]), 1e-13);
  }
}

} // namespace
