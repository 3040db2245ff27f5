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

#include "dgflow/exterior/algebra.hpp"
#include "dgflow/lattice/field.hpp"
#include "dgflow/lattice/spectral.hpp"

#include <array>

namespace dgflow::lattice {

/// Exterior derivative d = sum_a e_a ^ d/dx_a with the grid's scheme.
/// Spectral: Fourier multipliers; fd2: central differences. d o d = 0 and
/// every output component has zero mean.
template <int K>
Field<K + 1> d(const Field<K>& f);

/// d/dx_a of each component.
template <int K>
Field<K> partial(const Field<K>& f, int a);

/// Applies the symbol of d to one Fourier mode: out += e_a ^ (i s_a) in.
template <int K>
void d_symbol(const std::array<double, 4>& s, const Complex* in, Complex* out)
{
  const auto& table = exterior::detail::ext_table<K>();
  for (std::size_t a = 0; a < 4; ++a) {
    if (s[a] == 0.0)
      continue;
    const Complex is(0.0, s[a]);
    for (std::size_t i = 0; i < exterior::Form<K>::size; ++i) {
      const auto& e = table[a][i];
      if (e.sign != 0)
        out[e.index] += static_cast<double>(e.sign) * is * in[i];
    }
  }
}

/// h^4 times the pairwise sum of the coefficients: the integral over T^4.
double integrate(const Field4& f);
double integrate(const ScalarField& f);

/// Per-component grid means.
template <int K>
std::array<double, Field<K>::ncomp> means(const Field<K>& f);

using CohomologyClass2 = std::array<double, 6>;
/// Coordinates of [rho] in H^2 (the per-component means).
CohomologyClass2 cohomology(const Field2& rho);

/// Flat L^2 inner product and norm (Euclidean components, unit volume).
template <int K>
double inner_l2(const Field<K>& a, const Field<K>& b);
template <int K>
double norm_l2(const Field<K>& f);

/// 2/3-rule: zeroes every mode with 3 |m_a| >= n in some direction.
template <int K>
Field<K> dealias(const Field<K>& f);

/// Pointwise wedge products.
Field4 wedge(const Field2& a, const Field2& b);
Field3 wedge(const Field1& a, const Field2& b);
Field4 wedge(const Field1& a, const Field3& b);

} // namespace dgflow::lattice
