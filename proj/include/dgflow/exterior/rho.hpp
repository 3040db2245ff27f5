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

// Geometry attached to a nondegenerate 2-form rho on an oriented 4D space with
// background metric g: the volume ratio u, the endomorphism A, the metric
// g^rho, the involution R^rho and the Hodge stars of g^rho, the Theta map and
// its linearization, and the twisted complex structures J^rho.
//
// Overloads without a Metric4 argument assume the Euclidean background and
// take table-driven fast paths.

#include "dgflow/exterior/algebra.hpp"
#include "dgflow/exterior/forms.hpp"
#include "dgflow/exterior/hodge.hpp"
#include "dgflow/exterior/metric.hpp"

#include <array>

namespace dgflow::exterior {

/// Operations needing rho^rho > 0 reject u <= u_floor.
inline constexpr double u_floor = 1e-10;

/// u = (rho ^ rho) / (2 dvol_g). May be <= 0.
double u_of(const Form2& rho, const Metric4& g);
constexpr double u_of(const Form2& rho) { return 0.5 * wedge22(rho, rho); }

/// A with g(A v, w) = rho(v, w), i.e. A = G^{-1} P^T. det(A) = u^2.
LinMap4 A_of(const Form2& rho, const Metric4& g);

/// g^rho(v, w) = u^{-1} g(A v, A w). Same volume form as g.
Metric4 g_rho(const Form2& rho, const Metric4& g);
Mat4 g_rho_matrix(const Form2& rho); // Euclidean background, unchecked

/// R^rho(omega) = omega - (omega ^ rho / dvol_rho) rho.
Form2 R_rho(const Form2& omega, const Form2& rho);

/// Hodge star of g^rho on 1-forms: rho ^ *(rho ^ lambda) / u.
Form3 star_rho_1(const Form1& lambda, const Form2& rho, const Metric4& g);
/// Hodge star of g^rho on 2-forms: R * R omega.
Form2 star_rho_2(const Form2& omega, const Form2& rho, const Metric4& g);
Form2 star_rho_2(const Form2& omega, const Form2& rho);
/// Hodge star of g^rho on 3-forms (inverse of -star_rho_1).
Form1 star_rho_3(const Form3& gamma, const Form2& rho, const Metric4& g);

/// Theta^rho = *(rho/u) - 1/2 |rho/u|^2 rho.
Form2 theta_point(const Form2& rho, const Metric4& g);
Form2 theta_point(const Form2& rho);

/// Directional derivative of theta_point at rho along rho_hat:
/// (rho_hat + *^rho rho_hat)/u - |rho^+/u|^2 rho_hat.
Form2 theta_dot_point(const Form2& rho, const Form2& rho_hat, const Metric4& g);
Form2 theta_dot_point(const Form2& rho, const Form2& rho_hat);

/// J^rho defined by rho(J^rho v, w) = rho(v, J w); J^rho = P^{-1} J^T P.
LinMap4 j_rho(const LinMap4& j, const Form2& rho);

/// Solves omega2(., J3 .) = omega1, omega3(., J1 .) = omega2, omega1(., J2 .) = omega3.
std::array<LinMap4, 3> quaternion_triple(const Form2& w1, const Form2& w2, const Form2& w3);

/// Left multiplication by i, j, k on H = R^4; the complex structures of the
/// standard omegas with g = omega_i(., J_i .).
const std::array<LinMap4, 3>& standard_complex_structures();

/// The unique inner product with volume form `dvol` whose self-dual 2-forms
/// are spanned by `plane`.
Metric4 metric_from_vol_and_plane(const Form4& dvol, const std::array<Form2, 3>& plane);

/// Pivot tolerance of the wedge Gram-Schmidt in metric_from_vol_and_plane.
inline constexpr double plane_pivot_tol = 1e-10;
/// Threshold |omega1(v, J1 v)| for the sign probe in metric_from_vol_and_plane.
inline constexpr double sign_probe_tol = 1e-8;

} // namespace dgflow::exterior
