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

// FFTW-backed transforms of interleaved multi-component fields. Plans are
// created once per (n, ncomp) with FFTW_ESTIMATE, so results are reproducible
// run to run.

#include "dgflow/lattice/field.hpp"

#include <array>
#include <complex>
#include <vector>

namespace dgflow::lattice {

using Complex = std::complex<double>;
using Spectrum = std::vector<Complex>;

/// Unnormalized forward DFT of each component.
Spectrum fft_forward(const Grid& grid, const double* data, std::size_t ncomp);
/// Inverse DFT scaled by 1/n^4; writes the real part.
void fft_backward(const Grid& grid, Spectrum& spec, double* out, std::size_t ncomp);

template <int K>
Spectrum fft_forward(const Field<K>& f)
{
  return fft_forward(f.grid(), f.data(), Field<K>::ncomp);
}

template <int K>
Field<K> fft_backward(const Grid& grid, Spectrum& spec)
{
  Field<K> f(grid);
  fft_backward(grid, spec, f.data(), Field<K>::ncomp);
  return f;
}

/// Derivative symbols (s_0(k0), ..., s_3(k3)) of the mode stored at `site`.
inline std::array<double, 4> mode_symbols(const Grid& grid, std::size_t site)
{
  const auto k = grid.coords(site);
  return {grid.symbol(k[0]), grid.symbol(k[1]), grid.symbol(k[2]), grid.symbol(k[3])};
}

/// Signed wavenumbers of the mode stored at `site`.
inline std::array<int, 4> mode_wavenumbers(const Grid& grid, std::size_t site)
{
  const auto k = grid.coords(site);
  return {grid.wavenumber(k[0]), grid.wavenumber(k[1]), grid.wavenumber(k[2]), grid.wavenumber(k[3])};
}

} // namespace dgflow::lattice
