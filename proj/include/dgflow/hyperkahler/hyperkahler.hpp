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

// The flat hyperkaehler structure on T^4 and the identities built on the
// functions K_i = omega_i ^ rho / dvol_rho. Everything here is an independent
// route to quantities the flow module computes directly.

#include "dgflow/exterior/forms.hpp"
#include "dgflow/exterior/metric.hpp"
#include "dgflow/lattice/field.hpp"

#include <array>

namespace dgflow::hyperkahler {

using exterior::Form2;
using exterior::LinMap4;
using lattice::Field1;
using lattice::Field2;
using lattice::ScalarField;

/// Vector fields are stored in Field1 containers; component a is X^a.
using VectorField = Field1;

struct HKTriple
{
  std::array<Form2, 3> omegas;
  std::array<LinMap4, 3> js; // omega_i(., J_i .) is the Euclidean metric
};

const HKTriple& standard_triple();

// Pointwise versions.
std::array<double, 3> k_point(const Form2& rho);
Form2 theta_hk_point(const Form2& rho);

struct KFunctions
{
  std::array<ScalarField, 3> K;
};

KFunctions k_functions(const Field2& rho);

/// max - min of each K_i over the grid.
std::array<double, 3> k_variation(const KFunctions& k);

/// (1/2) int sum K_i^2 dvol_rho.
double energy_hk(const Field2& rho);

/// sum (K_i omega_i - K_i^2 rho / 2).
Field2 theta_hk(const Field2& rho);

/// sum_i dK_i o J_i^rho, the 1-form whose *^rho is dTheta.
Field1 dk_j_sum(const Field2& rho);

/// d(sum_i dK_i o J_i^rho). Equals -flow::rhs up to discretisation error.
Field2 grad_hk(const Field2& rho);

/// X with iota(X) rho = -mu, so that -d iota(X) rho = d mu.
VectorField vector_from_potential(const Field2& rho, const Field1& mu);

/// Hamiltonian field of F for rho: iota(X_F) rho = dF.
VectorField hamiltonian_field(const Field2& rho, const ScalarField& f);

/// L_X F = dF(X).
ScalarField lie_derivative(const VectorField& x, const ScalarField& f);

/// Flat covariant derivative nabla_Y Z = Y^a d_a Z.
VectorField covariant(const VectorField& y, const VectorField& z);

struct KhatHhat
{
  std::array<ScalarField, 3> khat; // (omega_i - K_i rho) ^ rho_hat / dvol_rho
  std::array<ScalarField, 3> hhat; // d(iota(X) omega_i) ^ rho / dvol_rho
};

/// rho_hat = d mu and X from vector_from_potential(rho, mu).
KhatHhat khat_hhat(const Field2& rho, const Field1& mu);

/// int sum (Khat_i^2 dvol_rho - K_i^2 rho_hat ^ rho_hat / 2).
double hessian_hk(const Field2& rho, const Field2& rho_hat);

/// int sum (Hhat_i^2 dvol_rho + omega_i(X, nabla_{X_{K_i}} X)); agrees with
/// the Hessian at critical points only.
double hessian_hhat(const Field2& rho, const Field1& mu);

struct HessianCovReport
{
  double A = 0, B = 0, C = 0, D = 0, E = 0;
  double residual = 0;     // |A + B + C + D - 2E|
  double rel_residual = 0; // residual / (|A| + |B| + |C| + |D| + 2|E|), 0 if all vanish
  double lhs = 0;          // int sum (Hhat^2 dvol + omega(X, nabla_{X_K} X))
  double rhs = 0;          // int sum (Khat^2 dvol - K^2 rho_hat^2 / 2) + B + int sum omega(X, nabla_X X_K)
};

/// Evaluates the A..E ledger for rho_hat = d mu with the bracket
/// [X_K, X] = nabla_X X_K - nabla_{X_K} X.
HessianCovReport hessiancov_check(const Field2& rho, const Field1& mu);

} // namespace dgflow::hyperkahler
