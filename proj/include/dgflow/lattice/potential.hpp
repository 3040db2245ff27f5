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

// Gauge-fixed 1-form potentials of exact 2-forms.
//
// Given an exact rho_hat and a metric field g, least_norm_potential returns the
// lambda with d lambda = rho_hat minimizing int lambda ^ *_g lambda. The
// minimizer is characterized by int kappa ^ *_g lambda = 0 for every closed
// 1-form kappa, i.e. *_g lambda is exact; on the torus this also fixes the
// harmonic (constant) part. The closed 1-forms of the discrete d include the
// Fourier modes whose derivative symbol vanishes, so these are gauge
// directions too.
//
// Solve: lambda = lambda0 + kappa with lambda0 the flat coexact potential and
// kappa in ker d. Conjugate gradients on P M P kappa = -P M lambda0, where M is
// the pointwise cometric of g and P the flat projection onto ker d.

#include "dgflow/exterior/metric.hpp"
#include "dgflow/lattice/field.hpp"

#include <vector>

namespace dgflow::lattice {

/// Per-site metric matrices.
using MetricField = std::vector<exterior::Mat4>;

MetricField euclidean_metric_field(const Grid& grid);

struct CgOptions
{
  double tol = 1e-10;  // relative residual
  int max_iter = 0;    // 0 means 50 n
  double exact_tol = 1e-10;
};

struct CgStats
{
  int iterations = 0;
  double relative_residual = 0.0;
};

/// Flat coexact potential: d lambda0 = rho_hat, d* lambda0 = 0, zero means.
/// Throws NotExact if rho_hat is not in the image of d to `exact_tol`
/// relative to max |rho_hat|.
Field1 coexact_potential(const Field2& rho_hat, double exact_tol = 1e-10);

/// Flat orthogonal projection onto closed 1-forms.
Field1 project_closed(const Field1& kappa);

/// Throws NotExact or NoConvergence.
Field1 least_norm_potential(const Field2& rho_hat, const MetricField& metric,
                            const CgOptions& options = {}, CgStats* stats = nullptr);

/// int lambda1 ^ *_g lambda2 with *_g taken pointwise from `metric`.
double metric_inner(const Field1& a, const Field1& b, const MetricField& metric);

} // namespace dgflow::lattice
