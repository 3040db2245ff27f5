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

// The energy functional on closed 2-forms in a fixed class, its gradient
// flow right-hand side, the Donaldson metric on exact 2-forms and the Hessian.
// Background: the flat metric on T^4 with unit volume.

#include "dgflow/lattice/field.hpp"
#include "dgflow/lattice/potential.hpp"

namespace dgflow::flow {

using lattice::Field1;
using lattice::Field2;
using lattice::Field3;
using lattice::Field4;
using lattice::Grid;
using lattice::ScalarField;

/// Throws DegenerateForm naming the first site with u <= u_floor (or a
/// non-finite coefficient).
void require_admissible(const Field2& rho);

double u_min(const Field2& rho);

/// Pointwise u = rho^rho / (2 dvol).
ScalarField u_field(const Field2& rho);

/// g^rho at every site.
lattice::MetricField metric_field(const Field2& rho);

/// Theta^rho pointwise.
Field2 theta_field(const Field2& rho);

/// E(rho) = int 2|rho+|^2 / (|rho+|^2 - |rho-|^2).
double energy(const Field2& rho);
/// E(rho) - 2 Vol = int |rho-|^2 / u, computed without cancellation.
double energy_excess(const Field2& rho);

/// d *^rho d Theta^rho, the negative gradient.
Field2 rhs(const Field2& rho);

/// int Theta^rho ^ rho_hat.
double first_variation(const Field2& rho, const Field2& rho_hat);

/// int lambda1 ^ *^rho lambda2 for the gauge-fixed potentials of two exact
/// forms. Throws NotExact, NoConvergence.
double donaldson_inner(const Field2& a, const Field2& b, const Field2& rho,
                       const lattice::CgOptions& options = {});
double donaldson_norm_sq(const Field2& rho_hat, const Field2& rho, const lattice::CgOptions& options = {});

/// int Theta_hat ^ rho_hat with Theta_hat the linearization of Theta.
double hessian_form(const Field2& rho, const Field2& rho_hat);

struct EnergyReport
{
  double energy = 0.0;
  double excess = 0.0;
  double l1_norm = 0.0;
  double c = 0.0; // int rho ^ rho
  double l1_bound = 0.0;
  bool bound_holds = false; // l1_norm <= l1_bound + 1e-10
};

/// ||rho||_{L^1} against sqrt(c (E - Vol)).
EnergyReport l1_report(const Field2& rho);

} // namespace dgflow::flow
