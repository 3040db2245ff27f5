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

namespace {

template <int K>
double norm_inf(const Form<K>& f)
{
  return max_abs(f);
}

double norm_inf(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

// Relative to the larger side, or absolute when both sides are below 1.
template <class T>
void record_equal(Recorder& rec, const std::string& name, const T& lhs, const T& rhs)
{
  const double a = norm_inf(lhs);
  const double b = norm_inf(rhs);
  rec.record(name, a, b, norm_inf(lhs - rhs), std::max({1.0, a, b}));
}

} // namespace

SuiteReport exterior_suite(const CheckOptions& options)
{
  const std::size_t samples = options.samples ? options.samples : 100000;
  constexpr double tol = 1e-9;
  Recorder rec("appendixA", options.seed);
  rec.declare("det_A", "det(A) = u^2", tol);
  rec.declare("star_star_2", "** = id on 2-forms", tol);
  rec.declare("star_star_1", "** = -id on 1-forms", tol);
  rec.declare("star_flat", "*g(v,.) = iota(v) dvol_g", tol);
  rec.declare("star_interior_dvol", "*iota(v) dvol_g = -g(v,.)", tol);
  rec.declare("star_omega_lambda", "*(omega ^ lambda) = -lambda o J for g = omega(., J .)", tol);
  rec.declare("compatible_volume", "g = omega(., J .) => omega^2/2 = dvol_g", tol);
  rec.declare("compatible_self_dual", "g = omega(., J .) => *omega = omega", tol);
  rec.declare("self_dual_unit_is_compatible", "*omega = omega, omega^2/2 = dvol_g => J := omega^-1 g, J^2 = -1", tol);
  rec.declare("R_involution", "R R omega = omega", tol);
  rec.declare("R_wedge_isometry", "R omega ^ R tau = omega ^ tau", tol);
  rec.declare("R_rho", "R rho = -rho", tol);
  rec.declare("vol_g_rho", "dvol(g_rho) = dvol_g", tol);
  rec.declare("star_rho_1form", "*_{g_rho} lambda = rho ^ *(rho ^ lambda) / u", tol);
  rec.declare("star_rho_interior", "*_{g_rho} iota(v) rho = -rho ^ g(v,.)", tol);
  rec.declare("g_rho_twisted_pair", "g_rho = (R omega)(., J^rho .)", tol);
  rec.declare("g_rho_self_dual_plane", "*_{g_rho} R omega_i = R omega_i", tol);
  rec.declare("star_rho_2form", "*_{g_rho} omega = R *_g R omega", tol);
  rec.declare("v_reconstruction", "metric(dvol_g, R Lambda^+_g) = g_rho", tol);
  rec.declare("plane_round_trip", "metric(dvol_g, Lambda^+_g) = g", tol);
  rec.declare("plane_basis_change", "metric(dvol_g, M Lambda^+_g) = g for M in GL+(3)", tol);
  rec.declare("quaternion_square", "J_i^2 = -1", tol);
  rec.declare("quaternion_product", "J_i J_j = J_k", tol);
  rec.declare("quaternion_frame", "det(v, J1 v, J2 v, J3 v) != 0", tol);
  rec.declare("quaternion_common_norm", "omega_1(v, J_1 v) = omega_2(v, J_2 v) = omega_3(v, J_3 v)", tol);
  rec.declare("quaternion_symmetric", "omega_i(w, J_i v) = omega_i(v, J_i w)", tol);
  rec.declare("anticommuting_triple", "Q^-1 J_i Q pairwise anticommuting => J1 J2 = +-J3", tol);

  const flow::CounterRng base(options.seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Sampler rnd(base.split(s));
    const Metric4 g = rnd.metric();
    const HodgeStar star(g);
    const double vol = g.volume();
    const Form2 rho = rnd.admissible(g);
    const Form2 w = rnd.form<2>();
    const Form2 tau = rnd.form<2>();
    const Form1 lambda = rnd.form<1>();
    const Vector4 v = rnd.vector();
    const Vector4 x = rnd.vector();
    const double u = u_of(rho, g);

    const double det = A_of(rho, g).m.determinant();
    rec.record("det_A", det, u * u, std::max(1e-300, u * u));

    record_equal(rec, "star_star_2", star(star(w)), w);
    record_equal(rec, "star_star_1", star(star(lambda)), -1.0 * lambda);
    const Form1 gv = g.flat(v);
    const Form3 iv_dvol = interior(v, volume_form(vol));
    record_equal(rec, "star_flat", star(gv), iv_dvol);
    record_equal(rec, "star_interior_dvol", star(iv_dvol), -1.0 * gv);

    const CompatibleTriple t = compatible_triple(g);
    const Form2& om = t.omegas[0];
    const Form1 lj = to_form1(t.js[0].m.transpose() * to_eigen(lambda));
    record_equal(rec, "star_omega_lambda", star(wedge12(lambda, om)), -1.0 * lj);
    rec.record("compatible_volume", 0.5 * wedge22(om, om), vol, vol);
    record_equal(rec, "compatible_self_dual", star(om), om);

    // converse: a random unit combination of the self-dual basis
    Eigen::Vector3d c(rnd.uniform(), rnd.uniform(), rnd.uniform());
    c /= std::max(c.norm(), 1e-3);
    c /= c.norm();
    const Form2 om_c = c[0] * t.omegas[0] + c[1] * t.omegas[1] + c[2] * t.omegas[2];
    const Mat4 jc = to_matrix(om_c).inverse() * g.matrix();
    record_equal(rec, "self_dual_unit_is_compatible", Mat4(jc * jc), Mat4(-Mat4::Identity()));

    const Form2 rw = R_rho(w, rho);
    const Form2 rt = R_rho(tau, rho);
    record_equal(rec, "R_involution", R_rho(rw, rho), w);
    const double wt = wedge22(w, tau);
    rec.record("R_wedge_isometry", wedge22(rw, rt), wt, std::max(1.0, max_abs(rw) * max_abs(rt)));
    record_equal(rec, "R_rho", R_rho(rho, rho), -1.0 * rho);

    // Six equivalent descriptions of g_rho, each against the direct one.
    const Metric4 gt = g_rho(rho, g);
    const HodgeStar star_t(gt);
    rec.record("vol_g_rho", gt.volume(), vol, vol);
    const Form3 s1 = star_t(lambda);
    record_equal(rec, "star_rho_1form", s1, star_rho_1(lambda, rho, g));
    const Form3 s3 = star_t(interior(v, rho));
    const Form3 r3 = -1.0 * wedge12(gv, rho);
    record_equal(rec, "star_rho_interior", s3, r3);
    const Mat4 twisted = to_matrix(R_rho(om, rho)) * j_rho(t.js[0], rho).m;
    record_equal(rec, "g_rho_twisted_pair", twisted, gt.matrix());
    std::array<Form2, 3> r_plane;
    for (std::size_t i = 0; i < 3; ++i) {
      r_plane[i] = R_rho(t.omegas[i], rho);
      record_equal(rec, "g_rho_self_dual_plane", star_t(r_plane[i]), r_plane[i]);
    }
    const Form2 s6 = star_t(w);
    record_equal(rec, "star_rho_2form", s6, star_rho_2(w, rho, g));

    record_equal(rec, "v_reconstruction", metric_from_vol_and_plane(volume_form(vol), r_plane).matrix(), gt.matrix());
    record_equal(rec, "plane_round_trip", metric_from_vol_and_plane(volume_form(vol), t.omegas).matrix(), g.matrix());
    Eigen::Matrix3d m;
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          m(i, j) = rnd.uniform();
    } while (m.determinant() < 0.1);
    std::array<Form2, 3> mixed;
    for (std::size_t i = 0; i < 3; ++i)
      mixed[i] = m(static_cast<int>(i), 0) * t.omegas[0] + m(static_cast<int>(i), 1) * t.omegas[1] +
                 m(static_cast<int>(i), 2) * t.omegas[2];
    record_equal(rec, "plane_basis_change", metric_from_vol_and_plane(volume_form(vol), mixed).matrix(), g.matrix());

    const auto js = quaternion_triple(t.omegas[0], t.omegas[1], t.omegas[2]);
    for (std::size_t i = 0; i < 3; ++i) {
      record_equal(rec, "quaternion_square", Mat4(js[i].m * js[i].m), Mat4(-Mat4::Identity()));
      const Mat4 prod = js[i].m * js[(i + 1) % 3].m;
      record_equal(rec, "quaternion_product", prod, js[(i + 2) % 3].m);
    }
    Mat4 frame;
    frame.col(0) = to_eigen(v);
    for (int i = 0; i < 3; ++i)
      frame.col(i + 1) = js[static_cast<std::size_t>(i)].m * to_eigen(v);
    // (v, J1 v, J2 v, J3 v) is g-orthogonal with equal lengths: det = |v|_g^4 / sqrt(det g)
    const double vg = g.inner(v, v);
    rec.record("quaternion_frame", std::fabs(frame.determinant()), vg * vg / vol, vg * vg / vol);
    std::array<double, 3> q;
    for (std::size_t i = 0; i < 3; ++i) {
      q[i] = evaluate(t.omegas[i], v, js[i](v));
      rec.record("quaternion_symmetric", evaluate(t.omegas[i], x, js[i](v)), evaluate(t.omegas[i], v, js[i](x)),
                 std::max(1.0, std::sqrt(vg * g.inner(x, x))));
    }
    rec.record("quaternion_common_norm", q[0], q[1], std::max(1.0, vg));
    rec.record("quaternion_common_norm", q[1], q[2], std::max(1.0, vg));

    const Mat4 rot = rnd.rotation();
    const auto& sj = standard_complex_structures();
    std::array<Mat4, 3> cj;
    for (std::size_t i = 0; i < 3; ++i)
      cj[i] = rot.transpose() * sj[i].m * rot;
    const Mat4 p12 = cj[0] * cj[1];
    const double err = std::min(norm_inf(Mat4(p12 - cj[2])), norm_inf(Mat4(p12 + cj[2])));
    rec.record("anticommuting_triple", norm_inf(p12), norm_inf(cj[2]), err, 1.0);
  }
  return rec.take();
}

} // namespace dgflow::checks
